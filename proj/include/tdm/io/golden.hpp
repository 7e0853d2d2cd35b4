#pragma once

#include <array>
#include <vector>

#include "tdm/ratfunc.hpp"

namespace tdm::io {

/// Golden rational function: numerator and the factored denominator, coefficients ascending in N.
struct GoldenMoment {
  int beta;
  int k;
  std::vector<long> num;
  std::vector<std::vector<long>> den_factors;

  RatFunc value() const {
    Poly den = Poly::constant(1, Var::N);
    for (const auto& f : den_factors) den *= poly_of(f, Var::N);
    return ratfunc_reduce(poly_of(num, Var::N), den);
  }

  static Poly poly_of(const std::vector<long>& c, Var v) {
    std::vector<Rational> r(c.begin(), c.end());
    return Poly(std::move(r), v);
  }
};

using TableBlock = std::array<std::array<long, 7>, 9>;

struct GoldenPoly {
  int index;
  std::vector<long> coeffs;  // ascending
};

struct GoldenSeries {
  int g;
  std::vector<long> coeffs;  // z^0 .. z^12
};

struct GoldenStore {
  std::vector<GoldenMoment> appendix_a;
  TableBlock table_beta2;
  TableBlock table_beta1;
  std::vector<GoldenPoly> r_polys;
  std::vector<GoldenPoly> p_polys;
  std::vector<GoldenSeries> f_beta1;
};

inline const GoldenStore& golden_store() {
  static const GoldenStore store{
      {
          {2, 2, {0, 0, 2}, {{-1, 0, 1}}},
          {2, 3, {0, 0, 0, 0, 6}, {{-4, 0, 1}, {-1, 0, 1}}},
          {2, 4, {0, 0, 0, 0, 2, 0, 22}, {{-9, 0, 1}, {-4, 0, 1}, {-1, 0, 1}}},
          {2, 5, {0, 0, 0, 0, 0, 0, 30, 0, 90}, {{-16, 0, 1}, {-9, 0, 1}, {-4, 0, 1}, {-1, 0, 1}}},
          {2, 6, {0, 0, 0, 0, 0, 0, 16, 0, 310, 0, 394},
           {{-25, 0, 1}, {-16, 0, 1}, {-9, 0, 1}, {-4, 0, 1}, {-1, 0, 1}}},
          {1, 2, {0, 0, 2}, {{-2, 1}, {1, 1}}},
          {1, 3, {0, 0, 0, 0, 6}, {{-4, 1}, {-2, 1}, {1, 1}, {2, 1}}},
          {1, 4, {0, 0, 0, 0, 0, -4, 22}, {{-6, 1}, {-4, 1}, {-2, 1}, {1, 1}, {2, 1}, {3, 1}}},
          {1, 5, {0, 0, 0, 0, 0, 0, 0, -60, 90},
           {{-8, 1}, {-6, 1}, {-4, 1}, {-2, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}},
          {1, 6, {0, 0, 0, 0, 0, 0, -64, -184, -48, -998, 394},
           {{-10, 1}, {-8, 1}, {-6, 1}, {-4, 1}, {-3, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}},
      },
      TableBlock{{
          {1, 0, 0, 0, 0, 0, 0},
          {1, 0, 0, 0, 0, 0, 0},
          {2, 0, 2, 0, 2, 0, 2},
          {6, 0, 30, 0, 126, 0, 510},
          {22, 0, 310, 0, 3262, 0, 31270},
          {90, 0, 2730, 0, 57330, 0, 1048410},
          {394, 0, 21980, 0, 805854, 0, 24848560},
          {1806, 0, 167076, 0, 9781002, 0, 468660192},
          {8558, 0, 1220100, 0, 106963626, 0, 7510405760},
      }},
      TableBlock{{
          {1, 0, 0, 0, 0, 0, 0},
          {1, 0, 0, 0, 0, 0, 0},
          {2, 2, 6, 10, 22, 42, 86},
          {6, 18, 102, 378, 1638, 6426, 26214},
          {22, 128, 1142, 7048, 47454, 291696, 1821094},
          {90, 840, 10650, 96000, 904530, 7786680, 66945450},
          {394, 5306, 89576, 1092460, 13529862, 152881422, 1704027412},
          {1806, 32802, 705012, 11060700, 172576362, 2451889734, 34038711504},
          {8558, 200064, 5297924, 103150528, 1966038698, 34052988736, 572050771840},
      }},
      {
          {2, {0, 0, 2}},
          {4, {0, 0, 2, 60, 6, -24, 16}},
          {6, {0, 0, 2, 408, 7572, 12600, -14110, 4464, -304, -96, 360}},
          {8, {0, 0, 2, 1908, 152298, 2426400, 7652766, -3243996, -5754378, 5724216, -2210472, 413136, -64776, 46656,
               16128}},
          {10, {0, 0, 2, 8016, 1927176, 98620176, 1479326572, 6426673488, 2587036584, -11252766096, 5092739154,
                2088897408, -2988047424, 1396450368, -351879792, 34986528, 936576, 9106560, 1209600}},
      },
      {
          {2, {2}},
          {3, {6}},
          {4, {22, 2}},
          {5, {90, 30}},
          {6, {394, 310, 16}},
          {7, {1806, 2730, 504}},
          {8, {8558, 21980, 9422, 360}},
          {9, {41586, 167076, 135954, 18264}},
      },
      {
          {0, {1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446}},
          {1, {0, 0, 2, 18, 128, 840, 5306, 32802, 200064, 1209168, 7261042, 43394802, 258401216}},
          {2, {0, 0, 6, 102, 1142, 10650, 89576, 705012, 5297924, 38478492, 272262050, 1887071274, 12862479402}},
          {3, {0, 0, 10, 378, 7048, 96000, 1092460, 11060700, 103150528, 905077728, 7576640950, 61098854454,
               477942694136}},
          {4, {0, 0, 22, 1638, 47454, 904530, 13529862, 172576362, 1966038698, 20583987894, 201838423616,
               1878183167916, 16744919877108}},
          {5, {0, 0, 42, 6426, 291696, 7786680, 152881422, 2451889734, 34052988736, 424606263984, 4868397305884,
               52193110266396, 529596113392928}},
          {6, {0, 0, 86, 26214, 1821094, 66945450, 1704027412, 34038711504, 572050771840, 8443921227936,
               112644843054780, 1385543912313132, 15943946323796556}},
      },
  };
  return store;
}

}  // namespace tdm::io
