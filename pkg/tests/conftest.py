from pathlib import Path

import pytest

from biquandle.knots import Diagram, parse_gauss_code
from biquandle.ring import LaurentPoly

DATA_PATH = Path(__file__).parent.parent / "data"

KNOT_3_1 = "O1-,O2-,U1-,O3+,U2-,U3+"
KNOT_4_96 = "O1-,O2-,U3+,U1-,O4-,U2-,O3+,U4-"
# virtual pass placement transcribed from a drawing
KNOT_3_1_VIRTUAL = "U3+,V2,O1-,V1,O2-,U1-,V2,O3+,V1,U2-"
# crossing signs transcribed from a drawing
LINK_7 = "O1-,O7-,O3+,U1-,U2-,U3+,O2-;U4-,O5+,U6-,U5+,O4-,O6-,U7-"
CLASSICAL_TREFOIL = "O1+,U2+,O3+,U1+,O2+,U3+"


def poly(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text)


@pytest.fixture
def knot_3_1() -> Diagram:
    return parse_gauss_code(KNOT_3_1)


@pytest.fixture
def knot_4_96() -> Diagram:
    return parse_gauss_code(KNOT_4_96)


@pytest.fixture
def knot_3_1_virtual() -> Diagram:
    return parse_gauss_code(KNOT_3_1_VIRTUAL)


@pytest.fixture
def link_7() -> Diagram:
    return parse_gauss_code(LINK_7)


@pytest.fixture
def examples_table() -> Path:
    return DATA_PATH / "tables" / "worked_examples.tsv"
