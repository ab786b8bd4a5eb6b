#pragma once

#include "suqes/matcher.hpp"

namespace suqes::reference {

// Published worked parameter sets, used as regression anchors and by the
// table1 / failure-demo reports. They satisfy the matching system only to the
// precision they were originally solved at (roughly four significant digits
// in 2k+3), which is why they are kept as data rather than recomputed.
struct MatchedCase {
  int n;
  int r;
  int N;
  SignB sign_b;
  double tau;
  double A;
  double b;
  double E0prime;

  SuqSpectrumParams spectrum() const { return {E0prime, A, tau, N}; }
  QesPotentialSpec qes() const { return {1.0, b, n, r}; }
};

inline constexpr MatchedCase n1_positive{1, 0, 151, SignB::Positive,
                                         0.0144503, 0.4343473, 12.589097,
                                         1636.8943};
inline constexpr MatchedCase n3_positive{3, 0, 325, SignB::Positive,
                                         0.00671384, 0.2960795, 18.469158,
                                         5168.941};
inline constexpr MatchedCase n9_positive{9, 0, 399, SignB::Positive,
                                         0.00545864, 0.2703882, 21.275801,
                                         7126.0336};
inline constexpr MatchedCase n1_negative{1, 0, 61, SignB::Negative,
                                         0.0157377, 0.4538508, -12.108743,
                                         390.66689};

}  // namespace suqes::reference
