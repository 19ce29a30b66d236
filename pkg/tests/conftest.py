import pytest

from bidistance.channel import ChannelParams
from bidistance.core import Code

C1_LINES = ["111000", "011100", "110000"]
C2_LINES = ["111000", "000111", "110000"]
EX4_A_LINES = ["01011", "11000", "10111"]
EX4_B_LINES = ["1111", "1001", "0000"]
EX5_LINES = ["1110", "0111", "1100"]


@pytest.fixture
def c1() -> Code:
    return Code.from_strings(C1_LINES)


@pytest.fixture
def c2() -> Code:
    return Code.from_strings(C2_LINES)


@pytest.fixture
def ex5_code() -> Code:
    return Code.from_strings(EX5_LINES)


@pytest.fixture
def params_ex1() -> ChannelParams:
    return ChannelParams.from_decimals("0.1", "0.15")


@pytest.fixture
def c1_file(tmp_path):
    path = tmp_path / "c1.code"
    path.write_text("".join(line + "\n" for line in C1_LINES))
    return path


@pytest.fixture
def c2_file(tmp_path):
    path = tmp_path / "c2.code"
    path.write_text("".join(line + "\n" for line in C2_LINES))
    return path


@pytest.fixture
def ex5_file(tmp_path):
    path = tmp_path / "ex5.code"
    path.write_text("".join(line + "\n" for line in EX5_LINES))
    return path
