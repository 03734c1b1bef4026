#include "flatder/tables.hpp"

namespace flatder {

YPoly RefinedTable::total() const {
  YPoly sum;
  for (const auto& [key, value] : entries) sum += value;
  return sum;
}

YPoly RefinedTable::at(TableKey key) const {
  auto it = entries.find(key);
  return it == entries.end() ? YPoly{} : it->second;
}

YPoly RefinedTable::long_final_at(TableKey key) const {
  auto it = long_final.find(key);
  return it == long_final.end() ? YPoly{} : it->second;
}

}  // namespace flatder
