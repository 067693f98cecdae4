#include "dssat/search.hpp"

namespace dssat {

const std::vector<TableRow>& saturation_table() {
  static const std::vector<TableRow> rows = {
      {true, 2, 7, {0, 1, 2, 1, 3, 1, 4, 5, 4, 1, 6, 1, 0}},
      {true, 2, 7, {0, 1, 0, 2, 0, 3, 4, 5, 4, 6, 4, 3, 0}},
      {true, 2, 7, {0, 1, 2, 1, 3, 1, 4, 1, 0, 5, 6, 5, 0}},
      {true, 3, 7, {0, 1, 2, 1, 0, 1, 2, 3, 4, 3, 2, 3, 4, 5, 6, 5, 4, 5, 6}},
      {true, 3, 7, {0, 1, 2, 1, 0, 1, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 6, 5, 6}},
      {true, 3, 7, {0, 1, 0, 1, 2, 1, 2, 3, 4, 5, 4, 3, 2, 3, 4, 5, 6, 5, 6}},
      {true, 3, 7, {0, 1, 0, 1, 2, 1, 2, 3, 2, 3, 4, 3, 4, 5, 6, 5, 4, 5, 6}},
      {true, 4, 7, {0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 4, 3, 0, 3, 4, 3, 5, 3, 6, 3, 5, 3, 6, 3, 0}},
      {true, 4, 7, {0, 1, 0, 1, 2, 1, 2, 1, 3, 1, 3, 1, 4, 1, 4, 1, 5, 1, 6, 1, 5, 1, 6, 1, 0}},
      {true, 4, 7, {0, 1, 0, 1, 0, 2, 0, 2, 3, 2, 3, 2, 0, 4, 0, 4, 0, 5, 0, 5, 0, 6, 0, 6, 0}},
      {true, 4, 7, {0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6, 0, 3, 0, 4, 0, 5, 0, 6, 0}},
      {true, 4, 7, {0, 1, 0, 2, 0, 2, 0, 1, 0, 3, 0, 4, 0, 3, 5, 3, 5, 3, 6, 3, 6, 3, 0, 4, 0}},
      {true, 5, 6, {0, 1, 2, 1, 0, 1, 0, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 4, 3, 4, 5}},
      {true, 5, 6, {0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 3, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 4, 3, 4, 5}},
      {true, 5, 6, {0, 1, 0, 1, 0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 4, 3, 4, 5, 4, 5, 4, 5}},
      {true, 5, 6, {0, 1, 0, 1, 0, 1, 2, 1, 2, 1, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 4, 5, 4, 5, 4, 5}},
  };
  return rows;
}

const std::vector<TableRow>& semisaturation_table() {
  static const std::vector<TableRow> rows = {
      {false, 2, 6, {0, 1, 0, 1, 2, 3, 2, 3, 4, 5, 4, 5}},
      {false, 2, 6, {0, 1, 2, 3, 0, 3, 2, 4, 5, 1, 4, 5}},
      {false, 2, 6, {0, 1, 2, 3, 4, 1, 4, 0, 3, 5, 2, 5}},
      {false, 2, 6, {0, 1, 2, 3, 4, 5, 2, 1, 5, 3, 0, 4}},
      {false, 4, 4, {0, 1, 0, 1, 0, 1, 2, 3, 2, 3, 2, 3}},
      {false, 4, 4, {0, 1, 2, 3, 1, 0, 2, 3, 1, 3, 0, 2}},
      {false, 4, 4, {0, 1, 2, 3, 1, 0, 3, 2, 1, 3, 0, 2}},
      {false, 4, 4, {0, 1, 2, 3, 2, 3, 2, 3, 0, 1, 0, 1}},
      {false, 3, 5, {0, 1, 2, 0, 1, 2, 0, 3, 4, 3, 4}},
      {false, 3, 5, {0, 1, 2, 3, 4, 2, 0, 1, 3, 2, 4}},
      {false, 3, 5, {0, 1, 2, 3, 4, 3, 1, 2, 4, 3, 0}},
      {false, 3, 6, {0, 1, 2, 3, 4, 5, 4, 0, 1, 2, 5, 4, 3}},
      {false, 5, 4, {0, 1, 0, 1, 0, 1, 0, 2, 3, 2, 3, 2, 3}},
      {false, 5, 4, {0, 1, 2, 3, 1, 0, 2, 3, 1, 0, 2, 3, 1}},
      {false, 5, 4, {0, 1, 2, 3, 1, 0, 2, 3, 1, 2, 3, 1, 0}},
      {false, 5, 4, {0, 1, 2, 3, 2, 0, 1, 3, 2, 0, 1, 3, 2}},
  };
  return rows;
}

}  // namespace dssat
