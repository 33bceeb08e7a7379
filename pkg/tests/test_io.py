import pytest

from covprune import Interval, ParseError, parse_instance, generate_instance
from covprune.io import Record, format_record


PLAIN = """\
# a comment
0 8
0 2

2 6
"""

BED = """\
chr2\t5\t9
chr1\t0\t4
chr2\t6\t12
"""


def test_parse_plain():
    inst = parse_instance(PLAIN)
    assert inst.fmt == "plain"
    assert inst.records == (Record(None, 0, 8), Record(None, 0, 2), Record(None, 2, 6))


def test_parse_bed3():
    inst = parse_instance(BED)
    assert inst.fmt == "bed3"
    assert inst.records[0] == Record("chr2", 5, 9)
    groups = inst.chromosomes()
    assert set(groups) == {"chr1", "chr2"}
    ivs, indices = groups["chr2"]
    assert indices == [0, 2]
    assert ivs.items == (Interval(5, 9), Interval(6, 12))


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_instance("0 5\nx 5\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_instance("0 5\n1 6\n7 7\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_instance("1 2 3 4\n")
    with pytest.raises(ParseError, match="negative"):
        parse_instance("chr1 -3 5\n", fmt="bed3")
    with pytest.raises(ParseError):
        parse_instance("chr1 4 5\n", fmt="plain")


def test_explicit_format_wins():
    # two integer columns are valid bed3 values but an invalid record count
    inst = parse_instance("3 9\n", fmt="plain")
    assert inst.fmt == "plain"
    with pytest.raises(ParseError):
        parse_instance("3 9\n", fmt="bed3")


def test_round_trip():
    for text, fmt in ((PLAIN, "plain"), (BED, "bed3")):
        inst = parse_instance(text)
        emitted = "\n".join(format_record(r, fmt) for r in inst.records) + "\n"
        again = parse_instance(emitted)
        assert again.records == inst.records


def test_generate_instance_deterministic():
    a = generate_instance(6, 1000, seed=42)
    b = generate_instance(6, 1000, seed=42)
    assert a == b
    assert generate_instance(6, 1000, seed=43) != a


def test_generate_instance_valid():
    ivs = generate_instance(500, 1000, seed=7)
    assert len(ivs) == 500
    for iv in ivs:
        assert 0 <= iv.start < iv.end <= 1000
        assert iv.length <= 100
    with pytest.raises(ValueError):
        generate_instance(0, 1000, seed=1)
