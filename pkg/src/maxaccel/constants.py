"""Pinned physical constants.

The values live in data/constants.txt (one documented CODATA vintage); this
module parses that table once at import.  Bumping the vintage is a deliberate
one-file change, and the test suite asserts both the table values and the
derived-row identities (mu_B = e*hbar/(2 m_e c), m_P = sqrt(hbar*c/G)).

Module-level float shortcuts are provided for numeric inner loops; the
`constant` lookup returns dimensioned `Quantity` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import UnknownConstantError
from .units import UNIT_STRINGS, Quantity


@dataclass(frozen=True)
class ConstantEntry:
    name: str
    quantity: Quantity
    unit: str
    source: str


def _parse_table(text: str) -> dict[str, ConstantEntry]:
    entries: dict[str, ConstantEntry] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        body, _, source = line.partition("#")
        name, value, unit = body.split()
        entries[name] = ConstantEntry(
            name, Quantity(float(value), UNIT_STRINGS[unit]), unit, source.strip())
    return entries


class ConstantsTable:
    """Immutable after construction; safe for concurrent reads."""

    def __init__(self, entries: dict[str, ConstantEntry]):
        self._entries = dict(entries)

    def __iter__(self):
        return iter(self._entries.values())

    def names(self) -> tuple[str, ...]:
        return tuple(self._entries)

    def entry(self, name: str) -> ConstantEntry:
        try:
            return self._entries[name]
        except KeyError:
            known = ", ".join(self._entries)
            raise UnknownConstantError(
                f"unknown constant {name!r}; known: {known}") from None

    def constant(self, name: str) -> Quantity:
        return self.entry(name).quantity


def _load() -> ConstantsTable:
    text = resources.files("maxaccel.data").joinpath("constants.txt").read_text()
    return ConstantsTable(_parse_table(text))


TABLE = _load()


def constant(name: str) -> Quantity:
    """Look up a pinned constant as a dimensioned quantity."""
    return TABLE.constant(name)


# Float shortcuts (canonical Gaussian-CGS magnitudes).
HBAR = TABLE.constant("hbar").value        # erg s
C = TABLE.constant("c").value              # cm/s
E_CHARGE = TABLE.constant("e").value       # esu
M_ELECTRON = TABLE.constant("m_e").value   # g
M_PROTON = TABLE.constant("m_p").value     # g
K_BOLTZMANN = TABLE.constant("k_B").value  # erg/K
G_NEWTON = TABLE.constant("G").value       # cm^3/(g s^2)
MU_BOHR = TABLE.constant("mu_B").value     # erg/G
M_PLANCK = TABLE.constant("m_P").value     # g

EV_ERG = 1.602176634e-12                   # 1 eV in erg (exact)
