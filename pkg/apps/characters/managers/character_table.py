"""
Tablas de caracteres por el método de Wigner-Mackey (pequeños grupos).

Para G = A ⋊ K con A = ⊕ Z_{n_i} y K abelianos, los irreducibles son
Ind(χ_u ⊗ ψ) desde A ⋊ K_u, con u un representante de cada K-órbita del dual
de A, K_u su estabilizador y ψ un carácter lineal de K_u. Como K es abeliano,

    χ(a, k) = [k ∈ K_u] · ψ(k) · Σ_{u' ∈ K·u} χ_{u'}(a).
"""
import logging
import threading
from fractions import Fraction
from itertools import product as cartesian
from math import lcm

from apps.characters.models import Character
from apps.cyclotomic.models import CycNum
from apps.default.exceptions import UnsupportedError
from apps.groups.managers.group_builder import build_group
from apps.groups.utils.isomorphism import extend_to_hom
from apps.groups.utils.structure import minimal_generators, subgroup_group

logger = logging.getLogger(__name__)


class CharacterTableBuilder:
    """Construye y cachea (por grupo y bajo un cerrojo) las tablas de caracteres."""

    def __init__(self):
        self._cache = {}
        self._lock = threading.Lock()

    def table(self, group):
        with self._lock:
            cached = self._cache.get(group)
        if cached is not None:
            return cached
        table = self._build(group)
        with self._lock:
            return self._cache.setdefault(group, table)

    # Construcción

    def _build(self, group):
        split = group.split
        if split is None:
            raise UnsupportedError(f"{group.spec_tag} no tiene estructura A ⋊ K: sin tabla de caracteres")
        complement = split.complement
        if complement is not None and not complement.is_abelian:
            raise UnsupportedError(f"{group.spec_tag}: el complemento K no es abeliano")
        moduli = split.moduli
        n_a = lcm(1, *moduli)
        k_order = split.k_order
        scale = [n_a // n for n in moduli]
        # la acción en el dual: w -> w·M_k (w con w_i múltiplo de N/n_i)
        duals = [tuple(u * s for u, s in zip(us, scale)) for us in cartesian(*(range(n) for n in moduli))]
        matrices = split.action

        def act(w, k):
            m = matrices[k]
            return tuple(
                sum(w[i] * m[i][j] for i in range(len(w))) % n_a for j in range(len(w))
            )

        seen = set()
        characters = []
        k_exponent = complement.exponent if complement is not None else 1
        conductor = lcm(n_a, k_exponent)
        coords = [split.decode(a) for a in range(split.a_order)]
        for w in duals:
            if w in seen:
                continue
            orbit = sorted({act(w, k) for k in range(k_order)})
            seen.update(orbit)
            stabilizer = [k for k in range(k_order) if act(w, k) == w]
            u = '(' + ','.join(str(x // s) for x, s in zip(w, scale)) + ')'
            # Σ_{u'} χ_{u'}(a) como exponentes de ζ_conductor
            step = conductor // n_a
            sums = [
                [step * (sum(x * c for x, c in zip(w2, ca)) % n_a) for w2 in orbit]
                for ca in coords
            ]
            for psi_label, psi in self._linear_characters(complement, stabilizer, conductor):
                values = [CycNum.rational(conductor, 0)] * group.order
                for k, shift in psi.items():
                    for a, exps in enumerate(sums):
                        values[k * split.a_order + a] = CycNum.from_exponents(conductor, [e + shift for e in exps])
                label = f"u={u}" if complement is None else f"u={u}|psi={psi_label}"
                characters.append(Character(group, tuple(values), label))
        logger.debug("%s: %d caracteres irreducibles", group.spec_tag, len(characters))
        return tuple(characters)

    @staticmethod
    def _linear_characters(complement, stabilizer, conductor):
        """
        Caracteres lineales de K_u como diccionarios k -> exponente de
        ζ_conductor, con su etiqueta por los valores en los generadores.
        """
        if complement is None or len(stabilizer) == 1:
            return [('()', {stabilizer[0]: 0})]
        sub, embedding = subgroup_group(complement, stabilizer)
        e = sub.exponent
        target = build_group(f"C{e}")
        gens = minimal_generators(sub)
        options = [range(0, e, e // sub.orders[g]) for g in gens]
        found = []
        for images in cartesian(*options):
            image = extend_to_hom(sub, target, gens, list(images))
            if image is None:
                continue
            psi = {embedding[i]: image[i] * (conductor // e) for i in range(sub.order)}
            label = '(' + ','.join(str(Fraction(t, e)) for t in images) + ')'
            found.append((label, psi))
        return found


character_tables = CharacterTableBuilder()


def char_table(group):
    """Irreducibles complejos de ``group``; Σ d² = |G|."""
    return character_tables.table(group)
