"""
English:
Tests for spbw/algebra/monomials.py and spbw/algebra/order.py
Validates exponent arithmetic, deglex / degrevlex and TOP / TOPREV.

Português:
Testes para spbw/algebra/monomials.py e spbw/algebra/order.py
Valida aritmética de expoentes, deglex / degrevlex e TOP / TOPREV.
"""

import pytest

from spbw.algebra.monomials import ExponentVector, lcm_all, monomials_up_to
from spbw.algebra.order import EQUAL, GREATER, LESS, ModuleOrder, MonomialOrder


def e(*entries):
    return ExponentVector.of(*entries)


class TestExponentVector:
    """PT: Testes para ExponentVector"""
    """EN: Tests for ExponentVector"""

    def test_addition_and_subtraction(self):
        """PT: Soma e diferença são componente a componente"""
        """EN: Sum and difference are componentwise"""
        assert e(1, 0, 2) + e(0, 3, 1) == e(1, 3, 3)
        assert e(2, 2) - e(1, 0) == e(1, 2)

    def test_negative_exponent_rejected(self):
        """PT: Expoente negativo deve gerar ValueError"""
        """EN: Negative exponent must raise ValueError"""
        with pytest.raises(ValueError):
            e(1, 0) - e(2, 0)

    def test_divides_and_lcm(self):
        """PT: Divisibilidade e mmc componente a componente"""
        """EN: Componentwise divisibility and lcm"""
        assert e(1, 1).divides(e(2, 1))
        assert not e(0, 2).divides(e(2, 1))
        assert e(1, 0, 1).lcm(e(0, 1, 1)) == e(1, 1, 1)
        assert lcm_all([e(1, 0), e(0, 2), e(1, 1)]) == e(1, 2)

    def test_dimension_mismatch(self):
        """PT: Dimensões diferentes devem gerar ValueError"""
        """EN: Different dimensions must raise ValueError"""
        with pytest.raises(ValueError):
            e(1, 0) + e(1, 0, 0)

    def test_render(self):
        """PT: Renderização de monômios"""
        """EN: Monomial rendering"""
        assert e(2, 1).render(("D1", "D2")) == "D1^2*D2"
        assert e(0, 0).render(("D1", "D2")) == "1"

    def test_first_and_last_index(self):
        assert e(0, 2, 1).first_index() == 1
        assert e(0, 2, 1).last_index() == 2
        assert e(0, 0).first_index() == -1

    def test_monomials_up_to(self):
        """PT: Quantidade de monômios de grau <= 2 em 2 variáveis"""
        """EN: Number of monomials of degree <= 2 in 2 variables"""
        assert len(list(monomials_up_to(2, 2))) == 6


class TestMonomialOrder:
    """PT: Testes para MonomialOrder"""
    """EN: Tests for MonomialOrder"""

    def test_deglex_degree_first(self):
        """PT: Grau total decide antes da posição"""
        """EN: Total degree decides first"""
        order = MonomialOrder.deglex(2)
        assert order.compare(e(0, 2), e(1, 0)) == GREATER
        assert order.compare(e(2, 1), e(1, 2)) == GREATER
        assert order.compare(e(1, 1), e(1, 1)) == EQUAL

    def test_deglex_precedence(self):
        """PT: Precedência D2 > D1 inverte o desempate"""
        """EN: Precedence D2 > D1 flips the tie break"""
        order = MonomialOrder.deglex(2, precedence=(1, 0))
        assert order.compare(e(1, 0), e(0, 1)) == LESS
        assert order.render(("D1", "D2")) == "deglex D2 > D1"

    def test_degrevlex(self):
        """PT: degrevlex compara pela última variável, com sinal trocado"""
        """EN: degrevlex looks at the last variable, smaller exponent wins"""
        order = MonomialOrder.degrevlex(3)
        assert order.compare(e(0, 2, 0), e(1, 0, 1)) == GREATER
        assert MonomialOrder.deglex(3).compare(e(0, 2, 0), e(1, 0, 1)) == LESS

    def test_unsupported_kind(self):
        """PT: Ordens não compatíveis com grau são rejeitadas"""
        """EN: Orders that are not degree compatible are rejected"""
        with pytest.raises(ValueError, match="unsupported monomial order"):
            MonomialOrder("lex", (0, 1))

    def test_precedence_must_be_permutation(self):
        with pytest.raises(ValueError):
            MonomialOrder("deglex", (0, 0))

    def test_key_dimension_mismatch(self):
        with pytest.raises(ValueError):
            MonomialOrder.deglex(2).key(e(1, 0, 0))

    def test_compatible_with_addition(self):
        """PT: alpha < beta implica alpha + gamma < beta + gamma"""
        """EN: alpha < beta implies alpha + gamma < beta + gamma"""
        for order in (MonomialOrder.deglex(3), MonomialOrder.degrevlex(3)):
            monomials = list(monomials_up_to(3, 2))
            for a in monomials:
                for b in monomials:
                    for c in monomials[:4]:
                        assert order.compare(a, b) == order.compare(a + c, b + c)


class TestModuleOrder:
    """PT: Testes para TOP / TOPREV"""
    """EN: Tests for TOP / TOPREV"""

    def test_toprev_prefers_smaller_index(self):
        """PT: TOPREV: yw*e1 > yw*e2"""
        """EN: TOPREV: yw*e1 > yw*e2"""
        order = ModuleOrder(MonomialOrder.deglex(3), "toprev")
        yw = e(1, 0, 1)
        assert order.module_compare((yw, 1), (yw, 2)) == GREATER

    def test_top_prefers_larger_index(self):
        order = ModuleOrder(MonomialOrder.deglex(3), "top")
        yw = e(1, 0, 1)
        assert order.module_compare((yw, 1), (yw, 2)) == LESS

    def test_term_decides_before_position(self):
        """PT: zw*e1 < yw*e1 com y > z"""
        """EN: zw*e1 < yw*e1 with y > z"""
        order = ModuleOrder(MonomialOrder.deglex(3), "toprev")
        assert order.module_compare((e(0, 1, 1), 1), (e(1, 0, 1), 1)) == LESS
        assert order.module_compare((e(0, 1, 1), 1), (e(0, 0, 1), 1)) == GREATER

    def test_index_out_of_range(self):
        """PT: Índice fora de 1..m gera IndexError"""
        """EN: Index outside 1..m raises IndexError"""
        order = ModuleOrder(MonomialOrder.deglex(2))
        with pytest.raises(IndexError):
            order.module_compare((e(1, 0), 0), (e(1, 0), 1))
        with pytest.raises(IndexError):
            order.module_compare((e(1, 0), 3), (e(1, 0), 1), rank=2)

    def test_unsupported_scheme(self):
        with pytest.raises(ValueError, match="unsupported module order"):
            ModuleOrder(MonomialOrder.deglex(2), "pot")
