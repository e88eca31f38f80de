#include "qknot/table.hpp"

namespace qknot {

const char* to_string(TableKind kind) {
  switch (kind) {
    case TableKind::b:
      return "b";
    case TableKind::c:
      return "c";
    case TableKind::d:
      return "d";
    case TableKind::CL:
      return "CL";
  }
  return "?";
}

Int CoefficientTable::at(int n, int m) const {
  auto it = entries.find({n, m});
  return it == entries.end() ? Int(0) : it->second;
}

Int CoefficientTable::at(int j, int i, int m) const {
  auto it = entries.find({j, i, m});
  return it == entries.end() ? Int(0) : it->second;
}

void CoefficientTable::set(std::vector<int> key, Int value) {
  if (value == 0) {
    entries.erase(key);
  } else {
    entries[std::move(key)] = std::move(value);
  }
}

}  // namespace qknot
