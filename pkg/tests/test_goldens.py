"""Pinned conversion pairs.

Byte-exact goldens: text -> bit pattern for the reader, bit pattern ->
text for the writer.  The expected values were computed once with the
exact-rational reference (and each writer output verified minimal and
round-tripping) and are frozen here; any regression is a diff against
this table.
"""

import pytest

from ezfloat import bits_to_float, double_to_string, float_to_bits, read_double

READ = [
    ('0', 0x0000000000000000),
    ('-0.0', 0x8000000000000000),
    ('+0.000', 0x0000000000000000),
    ('1', 0x3FF0000000000000),
    ('1.0E0', 0x3FF0000000000000),
    ('-2.5', 0xC004000000000000),
    ('0.5', 0x3FE0000000000000),
    ('.5', 0x3FE0000000000000),
    ('5.', 0x4014000000000000),
    ('1.5E3', 0x4097700000000000),
    ('00.100e1', 0x3FF0000000000000),
    ('5E-324', 0x0000000000000001),
    ('-5E-324', 0x8000000000000001),
    ('4.9406564584124654E-324', 0x0000000000000001),
    ('2.470328229206232721E-324', 0x0000000000000001),
    ('2.4703282292062327208828439643E-324', 0x0000000000000000),
    ('24703282292062327208828439643411068618252990130716238221279284125033775363510437593264991818081799618989828234772285886546332835517796989819938739800539093906315035659515570226392290858392449105184435931802849936536152500319370457678249219365623669863658480757001585769269903706311928279558551332927834338409351978015531246597263579574622766465272827220056374006485499977096599470454020828166226237857393450736339007967761930577506740176324673600968951340535537458516661134223766678604162159680461914467291840300530057530849048765391711386591646239524912623653881879636239373280423891018672348497668235089863388587925628302755995657524455507255189313690836254779186948667994968324049705821028513185451396213837722826145437693412532098591327667236328125E-1075',
     0x0000000000000000),
    ('2.2250738585072011e-308', 0x000FFFFFFFFFFFFF),
    ('2.2250738585072012e-308', 0x0010000000000000),
    ('2.2250738585072014E-308', 0x0010000000000000),
    ('1.7976931348623157E308', 0x7FEFFFFFFFFFFFFF),
    ('1.7976931348623159E308', 0x7FF0000000000000),
    ('1E309', 0x7FF0000000000000),
    ('-1E309', 0xFFF0000000000000),
    ('1E-400', 0x0000000000000000),
    ('-1E-400', 0x8000000000000000),
    ('9007199254740993', 0x4340000000000000),
    ('9007199254740995', 0x4340000000000002),
    ('0.1', 0x3FB999999999999A),
    ('0.3', 0x3FD3333333333333),
    ('3.141592653589793', 0x400921FB54442D18),
    ('2.718281828459045', 0x4005BF0A8B145769),
    ('1e22', 0x4480F0CF064DD592),
    ('1e23', 0x44B52D02C7E14AF6),
    ('1E-22', 0x3B5E392010175EE6),
    ('6.02214076E23', 0x44DFE185CA57C517),
    ('123456789012345678901234567890123456789e-25', 0x42A674E79C5FE523),
    ('179769313486231580793728971405303415079934132710037826936173778980444968292764750946649017977587207096330286416692887910946555547851940402630657488671505820681908902000708383676273854845817711531764475730270069855571366959622842914819860834936475292719074168444365510704342711559699508093042880177904174497792',
     0x7FF0000000000000),
    ('179769313486231580793728971405303415079934132710037826936173778980444968292764750946649017977587207096330286416692887910946555547851940402630657488671505820681908902000708383676273854845817711531764475730270069855571366959622842914819860834936475292719074168444365510704342711559699508093042880177904174497791',
     0x7FEFFFFFFFFFFFFF),
    ('NaN', 0x7FF8000000000000),
    ('-NaN', 0x7FF8000000000000),
    ('Infinity', 0x7FF0000000000000),
    ('+Infinity', 0x7FF0000000000000),
    ('-Infinity', 0xFFF0000000000000),
]
WRITE = [
    (0x0000000000000000, '0.0'),
    (0x8000000000000000, '-0.0'),
    (0x0000000000000001, '5.0E-324'),
    (0x8000000000000001, '-5.0E-324'),
    (0x000FFFFFFFFFFFFF, '2.225073858507201E-308'),
    (0x0010000000000000, '2.2250738585072014E-308'),
    (0x7FEFFFFFFFFFFFFF, '1.7976931348623157E308'),
    (0xFFEFFFFFFFFFFFFF, '-1.7976931348623157E308'),
    (0x3FF0000000000000, '1.0E0'),
    (0xBFF0000000000000, '-1.0E0'),
    (0x3FB999999999999A, '1.0E-1'),
    (0x3FD3333333333333, '3.0E-1'),
    (0x400921FB54442D18, '3.141592653589793E0'),
    (0x4005BF0A8B145769, '2.718281828459045E0'),
    (0x7FF0000000000000, 'Infinity'),
    (0xFFF0000000000000, '-Infinity'),
    (0x7FF8000000000000, 'NaN'),
    (0x4340000000000000, '9.007199254740992E15'),
    (0x4340000000000001, '9.007199254740994E15'),
    (0x3E70000000000000, '5.960464477539063E-8'),
    (0x00C0000000000000, '4.5569512622227484E-305'),
    (0x3FF0000000000001, '1.0000000000000002E0'),
    (0x3FEFFFFFFFFFFFFF, '9.999999999999999E-1'),
    (0x4197D78400000000, '1.0E8'),
    (0x44B52D02C7E14AF6, '1.0E23'),
    (0x3EB0C6F7A0B5ED8D, '1.0E-6'),
    (0x40FE240C9FCB0C02, '1.23456789012E5'),
    (0x7FE1CCF385EBC8A0, '1.0E308'),
    (0x0031FA182C40C60D, '1.0E-307'),
    (0xDFCA6891A0A620D4, '-2.7662478252957966E153'),
    (0xB2B91B9D0D4AE2A5, '-2.3841343469382675E-64'),
    (0xB1AA5D7730DF0203, '-1.9100310728678616E-69'),
    (0xAC4652B23241461B, '-2.0901841803790497E-95'),
    (0xC7E3641E4FDAFFD7, '-2.0620141123885485E38'),
    (0xDFD2C46C1A541119, '-3.931687689261345E153'),
    (0x8CB842A0BAA2B9C1, '-2.1685983044300415E-247'),
    (0x3B039CABD004ED40, '2.0278329254824173E-24'),
    (0xFB4E866A2C3F1FBB, '-9.078255347454952E285'),
    (0x96689DC0E2ECBCDB, '-1.0049728847273342E-200'),
    (0x114E4DB2C8E03F08, '2.558386655228828E-225'),
    (0xBC9E4401AC86BA75, '-1.0500506902237934E-16'),
    (0x7C264F8CF399B9D6, '1.0871260549123128E290'),
    (0x4B2826E3DC9D209E, '1.1566469097902452E54'),
    (0xFF58E0D4C565E7AE, '-2.7297029524283294E305'),
    (0x56C445E384D1713E, '9.522402123762674E109'),
    (0xEF4DCE06D1D3C309, '-1.4121239664683578E228'),
    (0x01E117C1502ADED3, '1.2761665830778222E-299'),
    (0x87E4620667DD0F42, '-1.2057023261996403E-270'),
    (0xD31AAA3C560CC95F, '-2.172701199911103E92'),
    (0x6839FE84E93B0931, '1.1859706490230959E194'),
    (0xD68678F537BC5730, '-6.597200469774809E108'),
    (0xF55684BC4FFBA121, '-1.6905800584529272E257'),
    (0x115D5C98639D2A61, '4.9577480575838496E-225'),
    (0x1CB3ACE5DFE1BE66, '2.036505790398381E-170'),
    (0x6479706BFB086A37, '1.0066999363501368E176'),
    (0x23B80A3E1B586F63, '1.2919824798336944E-136'),
]


@pytest.mark.parametrize("text,expected_bits", READ, ids=lambda v: repr(v)[:40])
def test_read_goldens(text, expected_bits):
    assert float_to_bits(read_double(text)) == expected_bits


def test_read_golden_count():
    assert len(READ) >= 25


@pytest.mark.parametrize("bits,expected_text", WRITE, ids=lambda v: repr(v)[:40])
def test_write_goldens(bits, expected_text):
    assert double_to_string(bits_to_float(bits)) == expected_text


def test_write_golden_count():
    assert len(WRITE) >= 25


def test_total_pinned_pairs():
    assert len(READ) + len(WRITE) >= 50
