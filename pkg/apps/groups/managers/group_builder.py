"""
Construcción de los grupos de la biblioteca a partir de un ``GroupSpec``.

Todo grupo salvo Q8 se construye como producto semidirecto A ⋊ K con A
abeliano, lo que fija la numeración de elementos (ver ``SplitStructure``).
"""
import logging
from functools import lru_cache
from itertools import product as cartesian

from sympy import isprime

from apps.default.exceptions import InvalidInputError, UnsupportedError
from apps.groups.models import (
    AccolaMaclachlanGroup,
    AllOfOrderLambdaQ,
    Alternating4,
    Cyclic,
    Dihedral,
    DirectProduct,
    FiniteGroup,
    Quaternion8,
    SemidirectCqC4,
    SplitStructure,
    parse_group_spec,
)
from apps.groups.utils.isomorphism import find_isomorphism
from apps.groups.utils.structure import class_histogram, order_histogram

logger = logging.getLogger(__name__)


def _identity_matrix(r):
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def _reduce_matrix(matrix, moduli):
    return tuple(tuple(x % n for x in row) for row, n in zip(matrix, moduli))


def _compose(m1, m2, moduli):
    """Matriz de φ1 ∘ φ2."""
    r = len(moduli)
    return tuple(
        tuple(sum(m1[i][l] * m2[l][j] for l in range(r)) % moduli[i] for j in range(r))
        for i in range(r)
    )


class GroupBuilder:
    """
    Fábrica de ``FiniteGroup``. Cada método público corresponde a una
    variante de ``GroupSpec``.
    """

    def build(self, spec):
        spec = parse_group_spec(spec)
        if isinstance(spec, Cyclic):
            return self.cyclic(spec.n)
        if isinstance(spec, Dihedral):
            return self.dihedral(spec.n)
        if isinstance(spec, SemidirectCqC4):
            return self.semidirect_cq_c4(spec.q, spec.rho)
        if isinstance(spec, AccolaMaclachlanGroup):
            return self.accola_maclachlan(spec.q)
        if isinstance(spec, Alternating4):
            return self.alternating4()
        if isinstance(spec, Quaternion8):
            return self.quaternion8()
        if isinstance(spec, DirectProduct):
            return self.direct_product([self.build(f) for f in spec.factors], spec.text)
        if isinstance(spec, AllOfOrderLambdaQ):
            return self.all_of_order(spec.lam, spec.q)
        raise InvalidInputError(f"Descriptor no soportado: {spec!r}")

    # Núcleo: productos semidirectos

    def extend_action(self, complement, moduli, gen_matrices):
        """
        Extiende las matrices de los generadores de K a una acción de todo K.

        Lanza ``InvalidInputError`` si las matrices no definen un
        homomorfismo K -> Aut(A).
        """
        r = len(moduli)
        if complement is None:
            return (_identity_matrix(r),)
        action = [None] * complement.order
        action[complement.identity] = _reduce_matrix(_identity_matrix(r), moduli)
        gens = complement.generator_elements
        mats = [_reduce_matrix(gen_matrices[name], moduli) for name in complement.generator_names]
        frontier = [complement.identity]
        while frontier:
            nxt = []
            for k in frontier:
                for s, m in zip(gens, mats):
                    ks = complement.table[k][s]
                    value = _compose(action[k], m, moduli)
                    if action[ks] is None:
                        action[ks] = value
                        nxt.append(ks)
                    elif action[ks] != value:
                        raise InvalidInputError("La acción dada no es un homomorfismo K -> Aut(A)")
            frontier = nxt
        return tuple(action)

    def semidirect(self, moduli, a_names, complement, gen_matrices, tag):
        """A ⋊ K con A = ⊕ Z_{n_i}; ``gen_matrices`` por nombre de generador de K."""
        moduli = tuple(moduli)
        action = self.extend_action(complement, moduli, gen_matrices)
        split = SplitStructure(moduli, complement, action)
        a_order = split.a_order
        k_order = split.k_order
        coords = [split.decode(a) for a in range(a_order)]
        add = [[split.encode(tuple(x + y for x, y in zip(ca, cb))) for cb in coords] for ca in coords]
        act = [[split.encode(split.apply(k, ca)) for ca in coords] for k in range(k_order)]
        k_table = complement.table if complement is not None else ((0,),)
        table = []
        for k in range(k_order):
            k_row, act_k = k_table[k], act[k]
            for a in range(a_order):
                add_a = add[a]
                table.append(tuple(
                    k_row[k2] * a_order + add_a[act_k[a2]]
                    for k2 in range(k_order) for a2 in range(a_order)
                ))
        generators = []
        for i, name in enumerate(a_names):
            unit = tuple(int(i == j) for j in range(len(moduli)))
            generators.append((name, split.encode(unit)))
        if complement is not None:
            for name, k in complement.generators:
                generators.append((name, k * a_order))
        return FiniteGroup(
            order=a_order * k_order,
            table=tuple(table),
            generators=tuple(generators),
            spec_tag=tag,
            split=split,
        )

    # Familias

    @lru_cache(maxsize=None)
    def cyclic(self, n, name='x'):
        if n < 1:
            raise InvalidInputError(f"Orden cíclico inválido: {n}")
        return self.semidirect((n,), (name,), None, {}, f"C{n}")

    @lru_cache(maxsize=None)
    def dihedral(self, n):
        if n < 2:
            raise InvalidInputError(f"D_n requiere n >= 2, se recibió {n}")
        return self.semidirect((n,), ('r',), self.cyclic(2, 's'), {'s': ((-1,),)}, f"D{n}")

    @lru_cache(maxsize=None)
    def semidirect_cq_c4(self, q, rho):
        self._require_prime(q)
        if pow(rho, 4, q) != 1 or rho % q == 0:
            raise InvalidInputError(f"rho={rho} no cumple rho^4 = 1 mod {q}")
        return self.semidirect(
            (q,), ('A',), self.cyclic(4, 'B'), {'B': ((rho,),)}, f"CqC4:q={q},rho={rho % q}",
        )

    @lru_cache(maxsize=None)
    def accola_maclachlan(self, q):
        """⟨x, y, z | x^{2q} = y^2 = z^2 = 1, xy = yx, zy = yz, zxz = x^{-1}y⟩."""
        self._require_prime(q)
        return self.semidirect(
            (2 * q, 2), ('x', 'y'), self.cyclic(2, 'z'), {'z': ((-1, 0), (1, 1))}, f"AM:q={q}",
        )

    @lru_cache(maxsize=None)
    def alternating4(self):
        return self.semidirect((2, 2), ('u', 'v'), self.cyclic(3, 'c'), {'c': ((0, 1), (1, 1))}, "A4")

    @lru_cache(maxsize=None)
    def quaternion8(self):
        # elementos ±1, ±i, ±j, ±k con índice 4·signo + unidad
        units = {(0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
                 (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
                 (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
                 (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2)}
        for u in range(1, 4):
            units[(u, 0)] = (0, u)
        table = []
        for a in range(8):
            sa, ua = divmod(a, 4)
            row = []
            for b in range(8):
                sb, ub = divmod(b, 4)
                s, u = units[(ua, ub)]
                row.append(((sa + sb + s) % 2) * 4 + u)
            table.append(tuple(row))
        return FiniteGroup(order=8, table=tuple(table), generators=(('i', 1), ('j', 2)), spec_tag="Q8")

    def direct_product(self, factors, tag=None):
        """Producto directo de grupos escindidos; los generadores llevan el índice del factor como sufijo."""
        factors = list(factors)
        if len(factors) == 1:
            return factors[0]
        splits = [self._as_split(f) for f in factors]
        moduli, a_names, gen_matrices = [], [], {}
        complements = [s.complement for s in splits if s.complement is not None]
        complement_owner = [i for i, s in enumerate(splits) if s.complement is not None]
        offsets = []
        for i, (f, s) in enumerate(zip(factors, splits)):
            offsets.append(len(moduli))
            moduli.extend(s.moduli)
            a_names.extend(self._basis_names(f, s, i + 1))
        r = len(moduli)
        complement = None
        if complements:
            complement = self._table_product(
                complements,
                [f"{i + 1}" for i in complement_owner],
            )
            for i, k_group in zip(complement_owner, complements):
                for name, k in k_group.generators:
                    block = splits[i].action[k]
                    matrix = [list(row) for row in _identity_matrix(r)]
                    off = offsets[i]
                    for x, row in enumerate(block):
                        for y, value in enumerate(row):
                            matrix[off + x][off + y] = value
                    gen_matrices[f"{name}{i + 1}"] = tuple(tuple(row) for row in matrix)
        tag = tag or 'x'.join(f.spec_tag for f in factors)
        return self.semidirect(moduli, a_names, complement, gen_matrices, tag)

    # Grupos de orden λq

    def small_groups(self, order):
        """Todos los grupos de orden ``order`` <= 8, salvo isomorfismo."""
        c = self.cyclic
        groups = {
            1: [c(1)],
            2: [c(2)],
            3: [c(3)],
            4: [c(4), self.direct_product([c(2), c(2)], 'C2xC2')],
            5: [c(5)],
            6: [c(6), self.dihedral(3)],
            7: [c(7)],
            8: [
                c(8),
                self.direct_product([c(4), c(2)], 'C4xC2'),
                self.direct_product([c(2), c(2), c(2)], 'C2xC2xC2'),
                self.dihedral(4),
                self.quaternion8(),
            ],
        }
        if order not in groups:
            raise InvalidInputError(f"Sólo se conocen los grupos de orden <= 8, se pidió {order}")
        return groups[order]

    def _homs_to_units(self, complement, q):
        """Homomorfismos K -> Z_q^*, como diccionarios nombre de generador -> unidad."""
        names = complement.generator_names
        options = [
            [u for u in range(1, q) if pow(u, complement.orders[g], q) == 1]
            for g in complement.generator_elements
        ]
        homs = []
        for choice in cartesian(*options):
            mats = {name: ((u,),) for name, u in zip(names, choice)}
            try:
                self.extend_action(complement, (q,), mats)
            except InvalidInputError:
                continue
            homs.append(dict(zip(names, choice)))
        return homs

    @lru_cache(maxsize=None)
    def all_of_order(self, lam, q):
        """
        Un representante por clase de isomorfismo de los grupos de orden λq.

        Para q > λ todo grupo es C_q ⋊ K. Se completan a mano los órdenes q²
        y 56 (= 8·7), donde el q-Sylow puede no ser normal o K no ser de orden λ.
        """
        self._require_prime(q)
        if not 1 <= lam <= 8:
            raise InvalidInputError(f"λ debe estar entre 1 y 8, se recibió {lam}")
        candidates = []
        if q > lam or (q == 7 and lam == 8):
            for k_group in self.small_groups(lam):
                for hom in self._homs_to_units(k_group, q):
                    units = ','.join(f"{n}={u}" for n, u in hom.items())
                    tag = f"C{q}:{k_group.spec_tag}[{units}]" if units else f"C{q}:{k_group.spec_tag}"
                    candidates.append(self.semidirect(
                        (q,), ('a',), k_group, {n: ((u,),) for n, u in hom.items()}, tag,
                    ))
        elif q == lam:
            candidates = [self.cyclic(q * q), self.direct_product([self.cyclic(q), self.cyclic(q)])]
        else:
            raise UnsupportedError(f"Orden {lam}·{q} fuera del caso q >= λ")
        if q == 7 and lam == 8:
            # C_2^3 ⋊ C_7 con la matriz compañera de x^3 + x + 1 sobre GF(2)
            candidates.append(self.semidirect(
                (2, 2, 2), ('u', 'v', 'w'), self.cyclic(7, 't'),
                {'t': ((0, 0, 1), (1, 0, 1), (0, 1, 0))}, "C2xC2xC2:C7",
            ))
        if lam == 8:
            # misma clase que algún C_q ⋊ D4, pero con complemento abeliano
            candidates.append(self.accola_maclachlan(q))
        classes = []
        for group in candidates:
            key = (order_histogram(group), class_histogram(group))
            for cls in classes:
                if cls[0] == key and find_isomorphism(group, cls[1][0]) is not None:
                    cls[1].append(group)
                    break
            else:
                classes.append((key, [group]))
        representatives = sorted((min(members, key=_representative_key) for _, members in classes),
                                 key=lambda g: g.table)
        logger.info("Orden %d·%d: %d candidatos, %d clases de isomorfismo",
                    lam, q, len(candidates), len(representatives))
        return tuple(representatives)

    # Auxiliares

    @staticmethod
    def _require_prime(q):
        if not isprime(q):
            raise InvalidInputError(f"q={q} no es primo")

    @staticmethod
    def _as_split(group):
        if group.split is not None:
            return group.split
        return SplitStructure((), group, tuple(() for _ in range(group.order)))

    @staticmethod
    def _basis_names(group, split, suffix):
        names = {g: name for name, g in group.generators}
        result = []
        for i in range(len(split.moduli)):
            unit = tuple(int(i == j) for j in range(len(split.moduli)))
            result.append(f"{names.get(split.encode(unit), f'e{i}')}{suffix}")
        return result

    @staticmethod
    def _table_product(groups, suffixes):
        """Producto directo de grupos por tablas; índice little-endian por factor."""
        orders = [g.order for g in groups]
        total = 1
        for n in orders:
            total *= n

        def split_index(x):
            parts = []
            for n in orders:
                parts.append(x % n)
                x //= n
            return parts

        def join(parts):
            index, base = 0, 1
            for p, n in zip(parts, orders):
                index += p * base
                base *= n
            return index

        parts = [split_index(x) for x in range(total)]
        table = tuple(
            tuple(join([g.table[a][b] for g, a, b in zip(groups, pa, pb)]) for pb in parts)
            for pa in parts
        )
        generators = []
        for i, (g, suffix) in enumerate(zip(groups, suffixes)):
            for name, k in g.generators:
                embedded = [0] * len(groups)
                embedded[i] = k
                generators.append((f"{name}{suffix}", join(embedded)))
        return FiniteGroup(
            order=total,
            table=table,
            generators=tuple(generators),
            spec_tag='x'.join(g.spec_tag for g in groups),
        )


def _representative_key(group):
    """Prefiere los representantes con tabla de caracteres (K abeliano); luego la menor tabla."""
    split = group.split
    ready = split is not None and (split.complement is None or split.complement.is_abelian)
    return (not ready, group.table)


group_builder = GroupBuilder()


@lru_cache(maxsize=None)
def _build_from_text(text):
    return group_builder.build(text)


def build_group(spec):
    """
    Construye el grupo (o la tupla de representantes, para ``all:``).

    Los grupos se cachean por su texto canónico, de modo que dos llamadas con
    el mismo descriptor devuelven el mismo objeto.
    """
    spec = parse_group_spec(spec)
    return _build_from_text(spec.text)
