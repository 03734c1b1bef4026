#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace flatder {

/// Published counts d_tau(n) for 2 <= n <= 10. Patterns sharing a row are
/// Wilf-equivalent; the first name is the one the row is checked through.
struct Table1Row {
  std::vector<std::string> patterns;
  std::array<std::uint64_t, 9> values;
};

inline constexpr int kTable1FirstN = 2;
inline constexpr int kTable1LastN = 10;

const std::vector<Table1Row>& table1();

}  // namespace flatder
