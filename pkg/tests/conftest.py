"""
English:
Fixtures configuration for spbw tests.
Defines reusable fixtures for:
- Evidence directory (1 per pytest session)
- Test presentations (diffusion, quantum algebra R, quantum plane, A1(q),
  QQ[x,y,z], QQ[x], QQ[x,y], A1(QQ), QQ[t][D; delta])

Português:
Configuração de fixtures para testes do spbw.
Define fixtures reutilizáveis para:
- Diretório de evidências (1 por sessão do pytest)
- Apresentações de teste
"""

import pytest
from fractions import Fraction
from pathlib import Path
from datetime import datetime

from spbw.algebra import QQ, ExponentVector, MonomialOrder, Presentation, polynomial_ring
from spbw.algebra.monomials import monomials_up_to


# Base evidence directory
EVIDENCE_DIR = Path(__file__).parent / "evidence"

ROOT_DIR = Path(__file__).parent.parent
CORPUS_DIR = ROOT_DIR / "corpus"


def pytest_configure(config):
    """PT: Cria diretório de evidências no início da sessão."""
    """EN: Creates evidence directory at session start."""
    EVIDENCE_DIR.mkdir(exist_ok=True)


# Global variable to keep same folder during entire session
_session_evidence_dir = None


@pytest.fixture(scope="session")
def session_evidence_dir():
    """
    PT: Cria UM diretório de evidências para toda a sessão do pytest.
    EN: Creates ONE evidence directory for entire pytest session.
    All tests in session use the same directory.
    """
    global _session_evidence_dir

    if _session_evidence_dir is None:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        _session_evidence_dir = EVIDENCE_DIR / f"run_{timestamp}"
        _session_evidence_dir.mkdir(parents=True, exist_ok=True)

    return _session_evidence_dir


@pytest.fixture
def temp_artifacts_dir(session_evidence_dir, request):
    """
    PT: Cria subdiretório para cada teste dentro da pasta da sessão.
    EN: Creates subdirectory for each test inside session folder.
    Structure: evidence/run_<timestamp>/<test_name>/
    """
    test_name = request.node.name.replace("[", "_").replace("]", "_")
    test_dir = session_evidence_dir / test_name
    test_dir.mkdir(parents=True, exist_ok=True)
    return test_dir


@pytest.fixture
def temp_run_dirs(temp_artifacts_dir):
    """
    PT: Cria estrutura completa de diretórios para os testes.
    EN: Creates complete run directory structure for tests.
    """
    from spbw.core.artifacts import create_run_dirs, generate_run_id

    run_id = generate_run_id()
    dirs = create_run_dirs(str(temp_artifacts_dir), run_id)
    return dirs


@pytest.fixture(scope="session")
def corpus_dir():
    """PT: Pasta com os arquivos .spbw de exemplo."""
    """EN: Folder with the example .spbw files."""
    return CORPUS_DIR


# ---------------------------
# Presentations
# ---------------------------

def _e(*entries):
    return ExponentVector.of(*entries)


@pytest.fixture(scope="session")
def diffusion():
    """
    PT: Álgebra de difusão, D2 D1 = 2 D1 D2 + x2 D1 - x1 D2 sobre QQ[x1, x2].
    EN: Diffusion algebra over QQ[x1, x2], deglex D1 > D2.
    """
    ring = polynomial_ring(("x1", "x2"))
    x1, x2 = ring.generator("x1"), ring.generator("x2")
    return Presentation.create(
        ring,
        ("D1", "D2"),
        order=MonomialOrder.deglex(2),
        relations={(0, 1): (2, {_e(1, 0): x2, _e(0, 1): -x1})},
    )


@pytest.fixture(scope="session")
def r_algebra():
    """
    PT: Álgebra quântica R com q = 2/3, mu = 1/2 sobre QQ[x], deglex y > z > w.
    EN: Quantum algebra R with q = 2/3, mu = 1/2 over QQ[x].
    """
    ring = polynomial_ring(("x",))
    x = ring.generator("x")
    return Presentation.create(
        ring,
        ("y", "z", "w"),
        order=MonomialOrder.deglex(3),
        sigma={0: [Fraction(3, 2) * x], 1: [2 * x], 2: [Fraction(2, 3) * x]},
        sigma_inverse={0: [Fraction(2, 3) * x], 1: [Fraction(1, 2) * x], 2: [Fraction(3, 2) * x]},
        relations={
            (0, 1): (Fraction(2, 3), {}),
            (0, 2): (1, {_e(0, 1, 0): Fraction(-5, 6) * x}),
            (1, 2): (Fraction(2, 3), {}),
        },
    )


@pytest.fixture(scope="session")
def quantum_plane():
    """PT: Plano quântico y x = 3 x y. EN: Quantum plane y x = 3 x y."""
    return Presentation.create(QQ, ("x", "y"), relations={(0, 1): (3, {})})


@pytest.fixture(scope="session")
def weyl_q():
    """PT: Análogo aditivo A1(q), y x = 2 x y + 1. EN: Additive analogue A1(q)."""
    return Presentation.create(QQ, ("x", "y"), relations={(0, 1): (2, {_e(0, 0): 1})})


@pytest.fixture(scope="session")
def weyl():
    """PT: Álgebra de Weyl A1(QQ), x t = t x + 1. EN: Weyl algebra A1(QQ)."""
    return Presentation.create(QQ, ("t", "x"), relations={(0, 1): (1, {_e(0, 0): 1})})


@pytest.fixture(scope="session")
def ore_weyl():
    """PT: Extensão de Ore QQ[t][D; delta], delta(t) = 1. EN: Ore extension QQ[t][D; delta]."""
    ring = polynomial_ring(("t",))
    return Presentation.create(ring, ("D",), delta={0: [1]})


@pytest.fixture(scope="session")
def qxyz():
    """PT: QQ[x, y, z] com twist trivial. EN: Trivial-twist QQ[x, y, z]."""
    return Presentation.commutative(QQ, ("x", "y", "z"))


@pytest.fixture(scope="session")
def qxy():
    """PT: QQ[x, y] com twist trivial. EN: Trivial-twist QQ[x, y]."""
    return Presentation.commutative(QQ, ("x", "y"))


@pytest.fixture(scope="session")
def qx():
    """PT: QQ[x] com twist trivial. EN: Trivial-twist QQ[x]."""
    return Presentation.commutative(QQ, ("x",))


# ---------------------------
# Random elements
# ---------------------------

def random_polynomial(presentation, rng, terms=3, degree=2):
    """
    PT: Polinomio aleatorio com coeficientes racionais pequenos (vezes um
    gerador de R, quando houver).
    EN: Random polynomial with small rational coefficients.
    """
    ring = presentation.ring
    gens = ring.generator_elements()
    exponents = list(monomials_up_to(presentation.n, degree))
    f = presentation.zero()
    for _ in range(terms):
        coeff = ring.coerce(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
        if gens and rng.random() < 0.5:
            coeff = coeff * rng.choice(gens)
        f = f + presentation.term(coeff, rng.choice(exponents))
    return f


@pytest.fixture
def make_random():
    """PT: Fabrica de polinomios aleatorios. EN: Random polynomial factory."""
    return random_polynomial
