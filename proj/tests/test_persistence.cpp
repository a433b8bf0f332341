#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "z2ph/errors.hpp"
#include "z2ph/fixtures.hpp"
#include "z2ph/homology.hpp"
#include "z2ph/persistence.hpp"

using namespace z2ph;

namespace {

Barcode bars(std::initializer_list<Bar> b) { return Barcode(std::vector<Bar>(b)); }

FilteredComplex two_vertices_and_edge() {
  FilteredComplex c;
  c.add_cell(0, 0, {});
  c.add_cell(0, 0, {});
  c.add_cell(1, 1, {0, 1});
  return c;
}

}  // namespace

TEST_CASE("pairing examples") {
  FilteredComplex point;
  point.add_cell(0, 0, {});
  CHECK(reduce(point).essential == std::vector<CellId>{0});

  const auto p = reduce(two_vertices_and_edge());
  REQUIRE(p.pairs.size() == 1);
  CHECK(p.pairs[0].birth == 1);
  CHECK(p.pairs[0].death == 2);
  CHECK(p.essential == std::vector<CellId>{0});

  const auto k = klein_height(2, 1);
  const auto kp = reduce(k);
  std::vector<std::pair<int, double>> essential;
  for (auto id : kp.essential) essential.emplace_back(k[id].dim, k[id].value);
  CHECK(essential == std::vector<std::pair<int, double>>{{0, -2}, {1, -1}, {1, 2}, {2, 2}});
  // Pairs exist only between cells entering at the same value.
  for (const auto& pr : kp.pairs) CHECK(k[pr.birth].value == k[pr.death].value);
}

TEST_CASE("barcode examples") {
  CHECK(barcode(klein_height(2, 1)) ==
        bars({{0, {-2, kInfinity}}, {1, {-1, kInfinity}}, {1, {2, kInfinity}}, {2, {2, kInfinity}}}));
  CHECK(barcode(klein_delta()) ==
        bars({{0, {0, kInfinity}}, {1, {0, kInfinity}}, {1, {0, kInfinity}}, {2, {0, kInfinity}}}));
  CHECK(barcode(two_vertices_and_edge()) == bars({{0, {0, 1}}, {0, {0, kInfinity}}}));
}

TEST_CASE("barcode rejects invalid bars and filtrations") {
  CHECK_THROWS_AS(bars({{0, {1, 1}}}), ValidationError);
  CHECK_THROWS_AS(bars({{-1, {0, 1}}}), ValidationError);
  FilteredComplex c;
  c.add_cell(0, 1, {});
  c.add_cell(0, 0, {});
  CHECK_THROWS_AS(barcode(c), ValidationError);
}

TEST_CASE("persistent Betti examples") {
  const auto k = barcode(klein_height(2, 1));
  CHECK(persistent_betti(k, 1, 0, 100) == 1);
  const auto b = bars({{1, {0, 2}}, {1, {1, 3}}});
  CHECK(persistent_betti(b, 1, 0.5, 2) == 0);
  CHECK(persistent_betti(b, 1, 1.5, 0) == 2);
  CHECK_THROWS_AS(persistent_betti(b, 1, 0, -1), ValidationError);
}

TEST_CASE("dimension function examples") {
  const auto f = dimension_function(bars({{0, {-2, kInfinity}}}), 0);
  CHECK(f.critical_values == std::vector<double>{-2});
  CHECK(f.dims == std::vector<std::size_t>{0, 1});
  const auto e = dimension_function(Barcode{}, 0);
  CHECK(e.critical_values.empty());
  CHECK(e.dims == std::vector<std::size_t>{0});
  const auto g = dimension_function(bars({{1, {0, 2}}, {1, {1, 3}}}), 1);
  CHECK(g.critical_values == std::vector<double>{0, 1, 2, 3});
  CHECK(g.dims == std::vector<std::size_t>{0, 1, 2, 1, 0});
  CHECK(g.at(-5) == 0);
  CHECK(g.at(1) == 2);
  CHECK(g.at(2.5) == 1);
  CHECK(g.at(3) == 0);
}

TEST_CASE("characteristic identities") {
  const std::vector<Interval> split{{0, 1}, {1, 2}}, whole{{0, 2}};
  CHECK(characteristic_sum_identity_check(split, whole));
  const std::vector<Interval> ij{{0, 2}, {1, 3}}, uc{{0, 3}, {1, 2}};
  CHECK(characteristic_sum_identity_check(ij, uc));
  const std::vector<Interval> a{{0, 1}}, b{{0, 2}};
  CHECK_FALSE(characteristic_sum_identity_check(a, b));
}

TEST_CASE("tied blocks can be reordered") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = oracle::random_simplicial(rng, 7, 2, 30);
    const auto c = lower_star(s, oracle::random_vertex_function(s, rng, -1, 1, 3));
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j < order.size() && c[order[j]].value == c[order[i]].value &&
             c[order[j]].dim == c[order[i]].dim) {
        ++j;
      }
      std::shuffle(order.begin() + i, order.begin() + j, rng);
      i = j;
    }
    const auto shuffled = c.reordered(order);
    REQUIRE(validate(shuffled).ok());
    CHECK(barcode(shuffled) == barcode(c));
  }
}

TEST_CASE("bars against sublevel homology and inclusion ranks") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const auto s = oracle::random_simplicial(rng, 7, 2, 30);
    const auto c = trial % 2 ? oracle::random_filtration(s, rng)
                             : lower_star(s, oracle::random_vertex_function(s, rng));
    const auto b = barcode(c);
    std::set<double> levels{-3.0, 5.0};
    for (const auto& cell : c.cells()) levels.insert(cell.value);
    for (double a : levels) {
      const auto xa = oracle::sublevel_set(c, a);
      for (int k = 0; k <= c.top_dim(); ++k) {
        CHECK(dimension_function(b, k).at(a) == oracle::subcomplex_betti(c, xa, k));
        CHECK(persistent_betti(b, k, a, 0) == dimension_function(b, k).at(a));
        std::size_t previous = persistent_betti(b, k, a, 0);
        for (double p : {0.25, 0.5, 1.0, 2.0, 4.0}) {
          const auto xb = oracle::sublevel_set(c, a + p);
          const oracle::CellSet none(c.size(), false);
          const auto r = persistent_betti(b, k, a, p);
          CHECK(r == oracle::relative_map_rank(c, k, xa, none, xb, none));
          CHECK(r <= previous);
          previous = r;
        }
      }
    }
  }
}

TEST_CASE("persistent Betti equals the rank of composite interval-module maps") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto intervals = oracle::random_intervals(rng, 6);
    std::vector<Bar> bs;
    for (const auto& i : intervals) bs.push_back({1, i});
    const Barcode b(bs);
    std::uniform_real_distribution<double> u(-0.5, 4.5), len(0.0, 3.0);
    for (int q = 0; q < 5; ++q) {
      const double a = u(rng), p = len(rng);
      CHECK(persistent_betti(b, 1, a, p) == oracle::interval_module_rank(intervals, a, a + p, rng));
    }
  }
}

TEST_CASE("no deaths means constant in p") {
  const auto b = barcode(klein_height(2, 1));
  for (int k = 0; k <= 2; ++k) {
    for (double a : {-2.0, -1.0, 0.0, 2.0, 5.0}) {
      for (double p : {0.0, 1.0, 10.0, 1e6}) {
        CHECK(persistent_betti(b, k, a, p) == persistent_betti(b, k, a, 0));
      }
    }
  }
}

TEST_CASE("characteristic identities on random reductions") {
  std::mt19937 rng(44);
  std::uniform_int_distribution<int> pt(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> xs;
    while (xs.size() < 4) {
      const int x = pt(rng);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    const double a = xs[0], b = xs[1], c = xs[2], d = xs[3];
    const std::vector<Interval> split{{a, b}, {b, c}}, whole{{a, c}};
    CHECK(characteristic_sum_identity_check(split, whole));
    const std::vector<Interval> ij{{a, c}, {b, d}}, uc{{a, d}, {b, c}};
    CHECK(characteristic_sum_identity_check(ij, uc));
    const std::vector<Interval> wrong{{a, d}, {b, d}};
    CHECK_FALSE(characteristic_sum_identity_check(ij, wrong));
  }
}
