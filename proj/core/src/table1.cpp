#include "flatder/table1.hpp"

namespace flatder {

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {{"12-3"}, {1, 1, 3, 8, 27, 103, 436, 2025, 10207}},
      {{"13-2", "1-32"}, {1, 1, 2, 3, 5, 8, 13, 21, 34}},
      {{"21-3"}, {1, 2, 7, 25, 101, 447, 2152, 11170, 62086}},
      {{"23-1", "32-1"}, {1, 2, 8, 32, 151, 784, 4467, 27568, 182820}},
      {{"31-2"}, {1, 2, 7, 23, 80, 283, 1018, 3705, 13611}},
      {{"1-23"}, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {{"2-13"}, {1, 2, 7, 23, 80, 283, 1018, 3705, 13611}},
      {{"2-31"}, {1, 2, 8, 30, 124, 530, 2341, 10584, 48761}},
      {{"3-12"}, {1, 2, 7, 25, 101, 444, 2116, 10849, 59518}},
      {{"3-21"}, {1, 2, 8, 31, 139, 673, 3521, 19690, 117026}},
  };
  return rows;
}

}  // namespace flatder
