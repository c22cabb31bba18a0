#include <doctest.h>

#include <random>

#include "cubit/error.hpp"
#include "cubit/measurement.hpp"
#include "cubit/text.hpp"
#include "oracle.hpp"

using namespace cubit;

namespace {

const RodIndex& royal_index() {
  static const RodIndex index(royal_cubit());
  return index;
}

}  // namespace

TEST_CASE("best_reading examples") {
  const auto& idx = royal_index();
  const auto five_eighths = idx.best_reading(Rational(29, 8));
  CHECK(five_eighths.reading.whole == 3);
  CHECK(five_eighths.reading.fraction == Rational(5, 8));
  CHECK(five_eighths.error_fingers.is_zero());
  CHECK(five_eighths.alignment.measured_value == Rational(29, 8));
  CHECK(five_eighths.alignment.end_mark.parts == 8);
  CHECK(five_eighths.alignment.end_mark.index == 5);

  const auto seven = idx.best_reading(Rational(7));
  CHECK(seven.reading.value == Rational(7));
  CHECK(seven.reading.fraction.is_zero());
  CHECK(seven.error_fingers.is_zero());
  CHECK(seven.alignment.end_mark.is_notch());

  // 1/100 < 1/32, so 0 is nearer than 1/16
  const auto tiny = idx.best_reading(Rational(1, 100));
  CHECK(tiny.reading.value == Rational(0));
  CHECK(tiny.error_fingers == Rational(-1, 100));
  CHECK(tiny.error_mm == Rational(-1, 100) * Rational(75, 4));
}

TEST_CASE("best_reading preconditions") {
  CHECK_THROWS_AS(royal_index().best_reading(Rational(-1, 2)), PreconditionError);
  CHECK_THROWS_AS(royal_index().best_reading(Rational(57, 2)), PreconditionError);
  CHECK_NOTHROW(royal_index().best_reading(Rational(28)));
}

TEST_CASE("ties go to the smaller value") {
  // 1/32 is exactly halfway between 0 and 1/16
  CHECK(royal_index().best_reading(Rational(1, 32)).reading.value == Rational(0));
  const RodIndex shrt(short_cubit());
  CHECK(shrt.best_reading(Rational(5, 2)).reading.value == Rational(2));
}

TEST_CASE("read_mm") {
  const auto& idx = royal_index();
  const auto cubit = idx.read_mm(Rational(525));
  CHECK(cubit.reading.value == Rational(28));
  CHECK(cubit.error_mm.is_zero());

  const auto sixteenth = idx.read_mm(Rational(75, 64));
  CHECK(sixteenth.reading.whole == 0);
  CHECK(sixteenth.reading.fraction == Rational(1, 16));
  CHECK(sixteenth.error_mm.is_zero());

  CHECK(idx.read_mm(Rational(0)).reading.value.is_zero());
  CHECK_THROWS_AS(idx.read_mm(Rational(-1)), PreconditionError);

  const auto off = idx.read_mm(Rational(19));
  CHECK(off.error_mm == off.error_fingers * Rational(75, 4));
  CHECK(off.reading.value == idx.best_reading(Rational(19) / Rational(75, 4)).reading.value);
}

TEST_CASE("alignments_for") {
  const auto halves = royal_index().alignments_for(Rational(1, 2));
  auto has = [&](int notch, int finger, int parts, int j) {
    for (const Alignment& a : halves) {
      if (a.start_notch == notch && a.end_mark.finger == finger &&
          a.end_mark.parts == parts && a.end_mark.index == j) {
        return true;
      }
    }
    return false;
  };
  CHECK(has(0, 1, 2, 1));
  CHECK(has(1, 1, 2, 1));
  for (const Alignment& a : halves) CHECK(a.measured_value == Rational(1, 2));

  // oracle: every notch/line pair at distance 1/2, counted by hand
  std::size_t expected = 0;
  for (const auto& p : oracle::line_positions(28, oracle::royal_subdivisions())) {
    for (int a = 0; a <= 28; ++a) {
      if ((p - oracle::Frac(a)).abs() == oracle::Frac(1, 2)) ++expected;
    }
  }
  CHECK(halves.size() == expected);

  CHECK(royal_index().alignments_for(Rational(1, 17)).empty());
  CHECK(royal_index().alignments_for(Rational(-1)).empty());

  // (a, b) with |a - b| = 3 on 0..24: 22 pairs per direction
  const auto threes = alignments_for(short_cubit(), Rational(3));
  CHECK(threes.size() == 2 * 22);
  int ltr = 0;
  for (const Alignment& a : threes) ltr += a.direction == Direction::LeftToRight;
  CHECK(ltr == 22);
}

TEST_CASE("alignments are listed in preference order") {
  const auto list = royal_index().alignments_for(Rational(1, 2));
  for (std::size_t i = 1; i < list.size(); ++i) {
    CHECK_FALSE(alignment_precedes(list[i], list[i - 1]));
  }
  CHECK(list.front().end_mark.parts == 2);
  CHECK(list.front().start_notch == 0);
}

TEST_CASE("draw") {
  const auto& idx = royal_index();
  const Alignment traced = idx.draw(parse_reading("2 4/5"));
  CHECK(traced.end_mark.kind == MarkKind::Incision);
  CHECK(traced.end_mark.parts == 5);
  CHECK(traced.end_mark.index == 4);
  CHECK(traced.end_mark.finger == 4);
  CHECK(traced.start_notch == 1);
  CHECK(traced.measured_value == Rational(14, 5));

  const Alignment zero = idx.draw(parse_reading("0"));
  CHECK(zero.start_notch == 0);
  CHECK(zero.end_mark.is_notch());
  CHECK(zero.measured_value.is_zero());

  CHECK_THROWS_AS(idx.draw(parse_reading("1/17")), Unachievable);

  // 2/4 is reported reduced but the simplest realization is the 2-part finger
  const Alignment half = idx.draw(parse_reading("2/4"));
  CHECK(half.end_mark.parts == 2);
  CHECK(format_reading(Reading::of(half.measured_value)) == "1/2");
}

TEST_CASE("reading text form") {
  CHECK(format_reading(Reading::of(Rational(3))) == "3");
  CHECK(format_reading(Reading::of(Rational(29, 8))) == "3 5/8");
  CHECK(format_reading(Reading::of(Rational(5, 8))) == "5/8");
  CHECK(format_reading(Reading::of(Rational(0))) == "0");
  CHECK_THROWS_AS(Reading::of(Rational(-1, 2)), PreconditionError);
  CHECK_THROWS_AS(parse_reading("-1/2"), PreconditionError);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Rational v(std::uniform_int_distribution<long>(0, 100000)(rng),
                     std::uniform_int_distribution<long>(1, 999)(rng));
    const Reading r = Reading::of(v);
    CHECK(parse_reading(format_reading(r)) == r);
    CHECK(r.value == Rational(r.whole) + r.fraction);
    CHECK(r.fraction.sign() >= 0);
    CHECK(r.fraction < Rational(1));
  }
}

TEST_CASE("oracle equivalence on random targets") {
  for (const RodSpec& rod : builtin_rods()) {
    const RodIndex idx(rod);
    const auto brute = oracle::to_rationals(oracle::achievable(rod.finger_count, rod.subdivisions));
    std::mt19937_64 rng(0xC0B17);
    for (int i = 0; i < 300; ++i) {
      const long den = std::uniform_int_distribution<long>(1, 1000)(rng);
      const long num = std::uniform_int_distribution<long>(0, rod.finger_count * den)(rng);
      const Rational t(num, den);
      const auto m = idx.best_reading(t);
      CAPTURE(t);
      CHECK(abs(m.error_fingers) == oracle::min_distance(brute, t));
      CHECK(m.alignment.measured_value == m.reading.value);
    }
  }
}

TEST_CASE("every achievable value reads back exactly and draws to itself") {
  for (const RodSpec& rod : builtin_rods()) {
    const RodIndex idx(rod);
    for (const Rational& v : idx.values()) {
      const auto m = idx.best_reading(v);
      CHECK(m.error_fingers.is_zero());
      CHECK(idx.draw(m.reading).measured_value == m.reading.value);
    }
  }
}

TEST_CASE("mirrored alignments realize the same value on the mirrored rod") {
  const RodSpec rod = royal_cubit();
  const RodIndex mirrored(mirror(rod));
  const auto mirrored_marks = mirrored.marks();
  for (const Rational& v : {Rational(29, 8), Rational(1, 2), Rational(14, 5), Rational(7)}) {
    for (const Alignment& a : royal_index().alignments_for(v)) {
      const Alignment b = mirror_alignment(a, 28);
      CHECK(b.measured_value == v);
      CHECK(std::find(mirrored_marks.begin(), mirrored_marks.end(), b.end_mark) !=
            mirrored_marks.end());
      if (!v.is_zero()) CHECK(b.direction != a.direction);
    }
  }
}

TEST_CASE("compose_long") {
  const RodSpec rod = royal_cubit();
  const auto thirty = compose_long(rod, Rational(30));
  CHECK(thirty.full_rods == 1);
  CHECK(thirty.remainder.reading.value == Rational(2));

  const auto boundary = compose_long(rod, Rational(28));
  CHECK(boundary.full_rods == 1);
  CHECK(boundary.remainder.reading.value.is_zero());

  const auto long_one = compose_long(rod, Rational(56) + Rational(5, 8));
  CHECK(long_one.full_rods == 2);
  CHECK(long_one.remainder.reading.value == Rational(5, 8));
  CHECK(long_one.total_value(rod) == Rational(56) + Rational(5, 8));

  CHECK_THROWS_AS(compose_long(rod, Rational(-1)), PreconditionError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational t(std::uniform_int_distribution<long>(0, 500000)(rng),
                     std::uniform_int_distribution<long>(1, 997)(rng));
    const auto lm = compose_long(royal_index(), t);
    CHECK(abs(lm.total_value(rod) - t) == abs(lm.remainder.error_fingers));
  }
}

TEST_CASE("one-shot best_reading agrees with the indexed search") {
  for (const RodSpec& rod : builtin_rods()) {
    const RodIndex idx(rod);
    std::mt19937_64 rng(0x5EED);
    std::vector<Rational> targets = {Rational(0), rod.length_fingers(), Rational(1, 32),
                                     Rational(29, 8), rod.length_fingers() - Rational(1, 4)};
    for (int i = 0; i < 300; ++i) {
      const long den = std::uniform_int_distribution<long>(1, 500)(rng);
      targets.emplace_back(std::uniform_int_distribution<long>(0, rod.finger_count * den)(rng),
                           den);
    }
    for (const Rational& v : idx.values()) targets.push_back(v);
    for (const Rational& t : targets) {
      const auto fast = best_reading(rod, t);
      const auto indexed = idx.best_reading(t);
      CAPTURE(t);
      CHECK(fast.reading == indexed.reading);
      CHECK(fast.error_fingers == indexed.error_fingers);
      CHECK(fast.alignment == indexed.alignment);
    }
  }
  CHECK_THROWS_AS(best_reading(royal_cubit(), Rational(-1)), PreconditionError);
  CHECK_THROWS_AS(best_reading(royal_cubit(), Rational(29)), PreconditionError);
}
