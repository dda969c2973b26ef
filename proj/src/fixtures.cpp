#include "boxspec/fixtures.hpp"

#include <cmath>

namespace boxspec::fixtures {

const std::vector<LineOscillatorRow>& harmonic_line_rows() {
  static const std::vector<LineOscillatorRow> rows = {
      {0, 1.0, 1.0000000000, 6.86},  {1, 3.0, 3.0000000000, 7.55},
      {2, 5.0, 5.0000000000, 7.09},  {3, 7.0, 7.0000000000, 7.14},
      {4, 9.0, 9.0000000000, 7.61},  {5, 11.0, 11.0000000000, 7.49},
      {6, 13.0, 13.0000000000, 6.85}, {7, 15.0, 15.0000000000, 7.07},
      {8, 17.0, 17.0000000000, 7.27}, {9, 19.0, 19.0000000000, 7.43},
      {10, 21.0, 21.0000000003, 7.46}, {11, 23.0, 23.0000000017, 7.49},
  };
  return rows;
}

const std::vector<AnharmonicRow>& anharmonic_rows() {
  static const std::vector<AnharmonicRow> rows = {
      {0, 1.3923516415, 1.3923516415, 3.4},
      {1, 4.6488127042, 4.6488127042, 3.4},
      {2, 8.6550499577, 8.6550499586, 3.4},
      {3, 13.1568038980, 13.1568038994, 3.7},
      {4, 18.0575574363, 18.0575574558, 3.4},
      {5, 23.2974414512, 23.2974415625, 3.4},
  };
  return rows;
}

const std::vector<RadialOscillatorRow>& radial_oscillator_rows() {
  // Gates: d=3 with ell in {0, 2} at 1e-6; d=4 with ell=0 at 1e-5.
  constexpr double g6 = 1e-6, g5 = 1e-5;
  static const std::vector<RadialOscillatorRow> rows = {
      {3, 0, 1, 3.0, 3.00000000, 6.00, g6},
      {3, 0, 5, 19.0, 19.00000001, 7.00, g6},
      {3, 0, 10, 39.0, 39.00000001, 8.75, g6},
      {3, 1, 1, 5.0, 5.00007348, 4.50, std::nullopt},
      {3, 1, 5, 21.0, 21.00167944, 6.25, std::nullopt},
      {3, 1, 10, 41.0, 41.00907276, 7.75, std::nullopt},
      {3, 2, 1, 7.0, 7.00000000, 6.00, g6},
      {3, 2, 5, 23.0, 23.00000001, 7.75, g6},
      {3, 2, 10, 43.0, 43.00000001, 9.25, g6},
      {3, 3, 1, 9.0, 9.00000001, 6.00, std::nullopt},
      {3, 3, 5, 25.0, 25.00000076, 7.25, std::nullopt},
      {3, 3, 10, 45.0, 45.00002070, 8.50, std::nullopt},
      {4, 0, 1, 4.0, 4.00073469, 4.25, g5},
      {4, 0, 5, 20.0, 20.00745550, 6.00, g5},
      {4, 0, 10, 40.0, 40.02454449, 7.50, g5},
      {4, 1, 1, 6.0, 6.00000262, 5.00, std::nullopt},
      {4, 1, 5, 22.0, 22.00011370, 6.50, std::nullopt},
      {4, 1, 10, 42.0, 42.00094014, 8.00, std::nullopt},
      {4, 2, 1, 8.0, 8.00000002, 6.00, std::nullopt},
      {4, 2, 5, 24.0, 24.00000248, 7.25, std::nullopt},
      {4, 2, 10, 44.0, 44.00004592, 8.50, std::nullopt},
      {4, 3, 1, 10.0, 10.00000000, 6.00, std::nullopt},
      {4, 3, 5, 26.0, 26.00000008, 7.50, std::nullopt},
      {4, 3, 10, 46.0, 46.00000274, 8.75, std::nullopt},
      {5, 0, 1, 5.0, 5.00007348, 4.50, std::nullopt},
      {5, 0, 5, 21.0, 21.00167944, 6.25, std::nullopt},
      {5, 0, 10, 41.0, 41.00907276, 7.75, std::nullopt},
      {5, 1, 1, 7.0, 7.00000000, 6.00, std::nullopt},
      {5, 1, 5, 23.0, 23.00000001, 7.75, std::nullopt},
      {5, 1, 10, 43.0, 43.00000001, 9.25, std::nullopt},
      {5, 2, 1, 9.0, 9.00000001, 6.00, std::nullopt},
      {5, 2, 5, 25.0, 25.00000076, 7.25, std::nullopt},
      {5, 2, 10, 45.0, 45.00002070, 8.50, std::nullopt},
      {5, 3, 1, 11.0, 11.00000001, 6.00, std::nullopt},
      {5, 3, 5, 27.0, 27.00000000, 8.00, std::nullopt},
      {5, 3, 10, 47.0, 47.00000001, 10.00, std::nullopt},
  };
  return rows;
}

const std::vector<HydrogenRow>& hydrogen_rows() {
  static const std::vector<HydrogenRow> rows = {
      {0, 1, -0.2500000000, -0.2499790730, 17.5, true},
      {0, 2, -0.06250000000, -0.06246859682, 40.5, false},
      {0, 3, -0.02777777778, -0.02773301831, 70.5, false},
      {0, 4, -0.01562500000, -0.01556528040, 107.0, false},
      {1, 1, -0.06250000000, -0.06231120892, 33.0, false},
      {1, 2, -0.02777777778, -0.02747649731, 60.0, false},
      {1, 3, -0.01562500000, -0.01526320869, 94.0, false},
      {1, 4, -0.01000000000, -0.009656788911, 143.0, false},
      {2, 1, -0.02777777778, -0.02777640178, 75.0, false},
      {2, 2, -0.01562500000, -0.01561644406, 108.0, false},
      {2, 3, -0.01000000000, -0.009970374676, 146.0, false},
      {2, 4, -0.006944444444, -0.006872824074, 189.0, false},
  };
  return rows;
}

const std::vector<ConfinedOscillatorRow>& confined_oscillator_rows() {
  static const std::vector<ConfinedOscillatorRow> rows = {
      {0, 4.951123323264, 4.951129323244},
      {1, 19.774534178560, 19.774534179209},
      {2, 44.452073828864, 44.452073829725},
      {3, 78.996921150976, 78.996921150748},
      {4, 123.410710456832, 123.410710456280},
      {5, 177.693843822080, 177.693843818558},
      {6, 241.846458758144, 241.846458765623},
      {7, 315.868612673536, 315.868612686280},
      {8, 399.760332976128, 399.760332979135},
      {9, 493.521634054144, 493.521634068796},
      {10, 597.152524107776, 597.152524136545},
      {11, 710.653008064512, 710.653008103290},
  };
  return rows;
}

double confined_oscillator_state0_gate_value() { return 4.95112; }
double confined_oscillator_state0_gate_tol() { return 1e-4; }

const std::vector<SineSquaredRow>& sine_squared_rows() {
  static const std::vector<SineSquaredRow> rows = {
      {0.1, 0, 1.024922118883},  {0.1, 1, 4.049947916808},
      {0.1, 2, 9.050038818610},  {0.1, 3, 16.050020833189},
      {0.1, 4, 25.050013020839}, {0.1, 5, 36.050008928573},
      {1.0, 0, 1.242428825987},  {1.0, 1, 4.494793078632},
      {1.0, 2, 9.503664867046},  {1.0, 3, 16.502081901038},
      {1.0, 4, 25.501302132228}, {1.0, 5, 36.500892873766},
      {5.0, 0, 2.082985293205},  {5.0, 1, 6.370661125009},
      {5.0, 2, 11.569339156939}, {5.0, 3, 18.551201398403},
      {5.0, 4, 27.532566336109}, {5.0, 5, 38.522331587359},
  };
  return rows;
}

const std::vector<ConfinedHydrogenRow>& confined_hydrogen_rows() {
  const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s7 = std::sqrt(7.0);
  static const std::vector<ConfinedHydrogenRow> rows = {
      {0, 1, 4.0, -1.0 / 16.0, -0.0624999668},
      {1, 1, 12.0, -1.0 / 36.0, -0.0277777498},
      {2, 1, 24.0, -1.0 / 64.0, -0.0156250000},
      {3, 1, 40.0, -1.0 / 100.0, -0.0100000000},
      {0, 1, 3.0 * (3.0 - s3), -1.0 / 36.0, -0.0277777466},
      {0, 2, 3.0 * (3.0 + s3), -1.0 / 36.0, -0.0277775785},
      {1, 1, 4.0 * (5.0 - s5), -1.0 / 64.0, -0.0156249729},
      {1, 2, 4.0 * (5.0 + s5), -1.0 / 64.0, -0.0156248833},
      {2, 1, 5.0 * (7.0 - s7), -1.0 / 100.0, -0.0100000000},
      {2, 2, 5.0 * (7.0 + s7), -1.0 / 100.0, -0.00999999997},
      {3, 1, 36.0, -1.0 / 144.0, -0.006944444438},
      {3, 2, 72.0, -1.0 / 144.0, -0.006944444431},
  };
  return rows;
}

const std::vector<SingularCase>& singular_cases() {
  static const std::vector<SingularCase> rows = {
      {1.0, 1.0, 1.0, 5.0, 5.00000003, 0.01, 5.2, 1e-6},
      {1.0, 9.0, 9.0, 7.0, 7.00000110, 0.01, 5.1, 1e-5},
  };
  return rows;
}

} // namespace boxspec::fixtures
