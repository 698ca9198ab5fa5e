#include <doctest.h>

#include "bentcert/error.hpp"
#include "bentcert/space.hpp"
#include "helpers.hpp"

using namespace bentcert;

TEST_CASE("dot products") {
  const Space s5(Field::make(5, 1), 3);
  CHECK(s5.dot(PointVector{{1, 2, 3}}, PointVector{{2, 0, 1}}).index() == 0);
  CHECK(s5.dot(PointVector{{4, 1, 3}}, PointVector{{0, 0, 0}}).index() == 0);

  const Space s9(Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1}), 1);
  CHECK(s9.dot(PointVector{{3}}, PointVector{{3}}).index() == 2);

  CHECK_THROWS_AS(s5.index(PointVector{{1, 2}}), Error);
  CHECK_THROWS_AS(s5.index(PointVector{{1, 2, 5}}), Error);
}

TEST_CASE("point codec") {
  const Space s(Field::make(3, 2), 2);
  const PointVector v{{4, 7}};
  CHECK(s.index(v) == 4 + 7 * 9);
  CHECK(s.vector(s.index(v)) == v);
  for (Space::Point x = 0; x < s.size(); ++x) CHECK(s.index(s.vector(x)) == x);
}

TEST_CASE("standard bases") {
  const Space s52(Field::make(5, 1), 2);
  auto b = SpaceBasis::standard(s52);
  CHECK(b.vectors() == std::vector<Space::Point>{s52.index({{1, 0}}), s52.index({{0, 1}})});

  const Field f9 = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  const Space s91(f9, 1);
  CHECK(SpaceBasis::standard(s91).vectors() == std::vector<Space::Point>{1, 3});

  const Space s92(f9, 2);
  CHECK(SpaceBasis::standard(s92).vectors() ==
        std::vector<Space::Point>{s92.index({{1, 0}}), s92.index({{3, 0}}), s92.index({{0, 1}}), s92.index({{0, 3}})});
}

TEST_CASE("decomposition over F_p") {
  const Field f9 = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  const Space s91(f9, 1);
  const auto b9 = SpaceBasis::standard(s91);
  CHECK(b9.decompose(f9.from_coeffs({2, 1}).index()) == std::vector<std::uint32_t>{2, 1});
  CHECK(b9.decompose(0) == std::vector<std::uint32_t>{0, 0});

  const Space s52(Field::make(5, 1), 2);
  CHECK(SpaceBasis::standard(s52).decompose(s52.index({{3, 4}})) == std::vector<std::uint32_t>{3, 4});
}

TEST_CASE("non-standard bases are validated") {
  const Space s(Field::make(5, 1), 2);
  CHECK_NOTHROW(SpaceBasis::from_points(s, {s.index({{1, 1}}), s.index({{1, 2}})}));
  CHECK_THROWS_AS(SpaceBasis::from_points(s, {s.index({{1, 1}}), s.index({{2, 2}})}), Error);
  CHECK_THROWS_AS(SpaceBasis::from_points(s, {s.index({{1, 1}})}), Error);
  CHECK_THROWS_AS(SpaceBasis::from_points(s, {0, 1}), Error);
}

TEST_CASE("recomposing digits round-trips, for standard and skewed bases") {
  for (const auto& F : bentcert::testing::small_fields(625)) {
    for (std::uint32_t d = 1; d <= 4; ++d) {
      std::uint64_t size = 1;
      for (std::uint32_t i = 0; i < d; ++i) size *= F.q();
      if (size > 625) break;
      const Space s(F, d);
      CAPTURE(F.describe());
      CAPTURE(d);
      auto standard = SpaceBasis::standard(s);
      // g_k + g_{k+1} for k < n-1, plus g_{n-1}: unitriangular, hence a basis
      auto vectors = standard.vectors();
      for (std::size_t k = 0; k + 1 < vectors.size(); ++k) vectors[k] = s.add(vectors[k], vectors[k + 1]);
      auto skewed = SpaceBasis::from_points(s, vectors);
      bool ok = true;
      for (Space::Point a = 0; a < s.size(); ++a) {
        ok = ok && standard.compose(standard.decompose(a)) == a;
        ok = ok && skewed.compose(skewed.decompose(a)) == a;
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("dot is bilinear") {
  for (const auto& F : bentcert::testing::small_fields(9)) {
    for (std::uint32_t d = 1; d <= 2; ++d) {
      const Space s(F, d);
      bool ok = true;
      for (Space::Point x = 0; x < s.size(); ++x)
        for (Space::Point y = 0; y < s.size(); ++y)
          for (Space::Point m = 0; m < s.size(); m += 3) {
            ok = ok && s.dot(s.add(x, y), m) == F.add(s.dot(x, m), s.dot(y, m));
            ok = ok && s.dot(x, m) == s.dot(m, x);
          }
      CHECK(ok);
    }
  }
}
