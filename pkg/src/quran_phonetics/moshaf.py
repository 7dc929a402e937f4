"""Moshaf attributes: the recitation-variant choices that drive phonetization."""

from __future__ import annotations

import hashlib
import warnings
from dataclasses import dataclass, field, fields, replace
from typing import Any, Mapping


class ConfigError(ValueError):
    """Invalid Moshaf configuration."""


REQUIRED_FIELDS = ("madd_monfasel_len", "madd_mottasel_len", "madd_mottasel_waqf", "madd_aared_len")

# Munfasil lengths listed in one place as {2,3,4,5} and elsewhere as {2,4,5,6};
# we accept the union and warn on the values only one source lists.
MONFASEL_DISPUTED = (3, 6)


def _attr(choices: tuple, default: Any = None, arabic: str = "", **meta):
    return field(default=default, metadata={"choices": choices, "arabic": arabic, **meta})


@dataclass(frozen=True)
class MoshafAttributes:
    madd_monfasel_len: int = _attr((2, 3, 4, 5, 6), arabic="مد المنفصل")
    madd_mottasel_len: int = _attr((4, 5, 6), arabic="مد المتصل")
    madd_mottasel_waqf: int = _attr((4, 5, 6), arabic="مد المتصل وقفا")
    madd_aared_len: int = _attr((2, 4, 6), arabic="مد العارض للسكون")
    madd_alleen_len: int | None = _attr((2, 4, 6), arabic="مد اللين")
    rewaya: str = _attr(("hafs",), "hafs", "الرواية")
    recitation_speed: str = _attr(
        ("mujawad", "above_murattal", "murattal", "hadr"), "murattal", "سرعة التلاوة", inert=True
    )
    takbeer: str = _attr(
        ("no_takbeer", "beginning_of_sharh", "end_of_doha", "general_takbeer"),
        "no_takbeer",
        "التكبير",
        inert=True,
    )
    madd_yaa_alayn_alharfy: int = _attr((2, 4, 6), 6, "مقدار المد اللازم الحرفي للعين")
    ghonna_lam_and_raa: str = _attr(("ghonna", "no_ghonna"), "no_ghonna", "غنة اللام و الراء")
    meem_aal_imran: str = _attr(("waqf", "wasl_2", "wasl_6"), "waqf", "ميم آل عمران")
    saken_before_hamz: str = _attr(
        ("tahqeeq", "general_sakt", "local_sakt"), "tahqeeq", "الساكن قبل الهمز"
    )
    sakt_iwaja: str = _attr(("sakt", "waqf", "idraj"), "waqf", "السكت عند عوجا")
    sakt_marqdena: str = _attr(("sakt", "waqf", "idraj"), "waqf", "السكت عند مرقدنا")
    sakt_man_raq: str = _attr(("sakt", "waqf", "idraj"), "sakt", "السكت عند من راق")
    sakt_bal_ran: str = _attr(("sakt", "waqf", "idraj"), "sakt", "السكت عند بل ران")
    sakt_maleeyah: str = _attr(("sakt", "waqf", "idgham"), "waqf", "وجه قوله ماليه")
    between_anfal_and_tawba: str = _attr(("waqf", "sakt", "wasl"), "waqf", "بين الأنفال والتوبة")
    noon_and_yaseen: str = _attr(("izhar", "idgham"), "izhar", "الإدغام في يس و ن")
    yaa_ataan: str = _attr(("wasl", "hadhf", "ithbat"), "wasl", "ياء آتان")
    start_with_ism: str = _attr(("wasl", "lism", "alism"), "wasl", "الابتداء بالاسم")
    yabsut: str = _attr(("seen", "saad"), "seen", "يبسط")
    bastah: str = _attr(("seen", "saad"), "seen", "بسطة")
    almusaytirun: str = _attr(("seen", "saad"), "saad", "المصيطرون")
    bimusaytir: str = _attr(("seen", "saad"), "saad", "بمصيطر")
    tasheel_or_madd: str = _attr(("tasheel", "madd"), "madd", "همزة الوصل بعد همزة الاستفهام")
    yalhath_dhalik: str = _attr(("izhar", "idgham", "waqf"), "idgham", "يلهث ذلك")
    irkab_maana: str = _attr(("izhar", "idgham", "waqf"), "idgham", "اركب معنا")
    noon_tamna: str = _attr(("ishmam", "rawm"), "ishmam", "تأمنا")
    harakat_daaf: str = _attr(("fath", "dam"), "fath", "ضعف")
    alif_salasila: str = _attr(("hadhf", "ithbat", "wasl"), "wasl", "سلاسلا")
    idgham_nakhluqkum: str = _attr(("idgham_kamil", "idgham_naqis"), "idgham_kamil", "نخلقكم")
    raa_firq: str = _attr(("waqf", "tafkheem", "tarqeeq"), "tafkheem", "فرق")
    raa_alqitr: str = _attr(("wasl", "tafkheem", "tarqeeq"), "wasl", "القطر")
    raa_misr: str = _attr(("wasl", "tafkheem", "tarqeeq"), "wasl", "مصر")
    raa_nudhur: str = _attr(("wasl", "tafkheem", "tarqeeq"), "tafkheem", "نذر")
    raa_yasr: str = _attr(("wasl", "tafkheem", "tarqeeq"), "tarqeeq", "يسر")
    meem_mokhfah: str = _attr(("meem", "ikhfaa"), "ikhfaa", "الميم المخفاة")

    def __post_init__(self):
        if self.madd_alleen_len is None and self.madd_aared_len is not None:
            object.__setattr__(self, "madd_alleen_len", self.madd_aared_len)

    def fingerprint(self) -> str:
        return hashlib.sha256(render_attributes(self).encode("utf-8")).hexdigest()[:16]

    def with_(self, **changes) -> "MoshafAttributes":
        if "madd_aared_len" in changes and "madd_alleen_len" not in changes:
            changes["madd_alleen_len"] = None
        return replace(self, **changes)


FIELD_NAMES = tuple(f.name for f in fields(MoshafAttributes))
CHOICES = {f.name: f.metadata["choices"] for f in fields(MoshafAttributes)}
INERT_FIELDS = tuple(f.name for f in fields(MoshafAttributes) if f.metadata.get("inert"))


def _check_value(name: str, value: Any) -> Any:
    choices = CHOICES[name]
    if isinstance(choices[0], int):
        if isinstance(value, str):
            try:
                value = int(value.strip())
            except ValueError:
                raise ConfigError(f"{name}: expected an integer, got {value!r}") from None
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{name}: expected an integer, got {value!r}")
    if value not in choices:
        raise ConfigError(f"{name}: illegal value {value!r} (allowed: {', '.join(map(str, choices))})")
    if name == "madd_monfasel_len" and value in MONFASEL_DISPUTED:
        warnings.warn(f"madd_monfasel_len={value} is listed by only one of the sources", stacklevel=3)
    return value


def default_attributes(required: Mapping[str, Any] | None = None, **overrides) -> MoshafAttributes:
    values = dict(required or {})
    values.update(overrides)
    for name in REQUIRED_FIELDS:
        if values.get(name) is None:
            raise ConfigError(f"{name} required")
    unknown = set(values) - set(FIELD_NAMES)
    if unknown:
        raise ConfigError(f"unknown field: {sorted(unknown)[0]}")
    checked = {k: (None if v is None else _check_value(k, v)) for k, v in values.items()}
    return MoshafAttributes(**checked)


def reference_attributes(**overrides) -> MoshafAttributes:
    """Defaults plus 4-beat choices for every no-default madd (a common Hafs setting)."""
    base = {name: 4 for name in REQUIRED_FIELDS}
    base.update(overrides)
    return default_attributes(base)


def parse_attributes(text: str) -> MoshafAttributes:
    values: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in FIELD_NAMES:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if not value:
            raise ConfigError(f"line {lineno}: {key}: missing value")
        try:
            values[key] = _check_value(key, value)
        except ConfigError as e:
            raise ConfigError(f"line {lineno}: {e}") from None
    return default_attributes(values)


def render_attributes(attrs: MoshafAttributes) -> str:
    return "".join(f"{name} = {getattr(attrs, name)}\n" for name in FIELD_NAMES)


def validate_attributes(attrs: MoshafAttributes) -> list[str]:
    """Every violated invariant; an empty list means the attributes are valid."""
    violations = []
    for name in FIELD_NAMES:
        value = getattr(attrs, name)
        if value is None:
            violations.append(f"{name} required")
        elif value not in CHOICES[name] or isinstance(value, bool):
            violations.append(f"{name}: illegal value {value!r}")
    alleen, aared = attrs.madd_alleen_len, attrs.madd_aared_len
    if isinstance(alleen, int) and isinstance(aared, int) and alleen > aared:
        violations.append("madd_alleen_len > madd_aared_len")
    return violations
