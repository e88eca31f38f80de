#pragma once

/**
 * @file table.hpp
 * @brief Integer coefficient tables b, c, d and CL with their truncation metadata.
 */

#include <map>
#include <string>
#include <vector>

#include "qknot/bigint.hpp"

namespace qknot {

enum class TableKind { b, c, d, CL };

const char* to_string(TableKind kind);

/**
 * Sparse integer table. b, c and d are keyed by (n, m); CL by (j, i, m).
 * Absent keys inside the stored range are zero.
 *
 * order: D for b and c (entries with n + m <= D are determined), M for d and CL
 * (entries with m <= M). r is 0 for b.
 */
struct CoefficientTable {
  TableKind kind = TableKind::b;
  int r = 0;
  int order = 0;
  int levels = 0;  // CL only: top level J
  std::map<std::vector<int>, Int> entries;

  Int at(int n, int m) const;
  Int at(int j, int i, int m) const;
  void set(std::vector<int> key, Int value);
  bool operator==(const CoefficientTable&) const = default;
};

}  // namespace qknot
