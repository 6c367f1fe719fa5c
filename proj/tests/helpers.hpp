#pragma once

#include <optional>

#include "hcube/hcube.hpp"
#include "oracle.hpp"

namespace testing_support {

inline oracle::Kind to_oracle(hcube::GraphKind k) {
  switch (k) {
    case hcube::GraphKind::FullCube: return oracle::Kind::Full;
    case hcube::GraphKind::HalvedEven: return oracle::Kind::Even;
    case hcube::GraphKind::HalvedOdd: return oracle::Kind::Odd;
  }
  return oracle::Kind::Full;
}

inline oracle::Matrix to_oracle(const hcube::QuotientMatrix& m) { return m.rows(); }

/// Brute-force quotient of a library partition.
inline std::optional<oracle::Matrix> oracle_quotient(const hcube::Partition& p) {
  return oracle::quotient(to_oracle(p.graph().kind()), p.graph().n(), p.k(),
                          [&](oracle::Word w) { return p.label_of(w); });
}

}  // namespace testing_support
