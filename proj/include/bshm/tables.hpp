#pragma once

#include <string>
#include <vector>

#include "bshm/param_rules.hpp"

namespace bshm {

std::string equiangular_tsv(const std::vector<EnumRow>& rows);
std::string typed_tsv(const std::vector<EnumRow>& rows);
std::string imprimitive_tsv(const std::vector<ImprimitiveRow>& rows, bool open_only);

// Published tables 2..6 regenerated under the given policy.
std::string table_tsv(int table, const HadamardOraclePolicy& policy = {});

struct TableDiff {
  int table = 0;
  bool equal = false;
  std::vector<std::string> missing;  // golden lines not produced
  std::vector<std::string> surplus;  // produced lines absent from the golden file
};

TableDiff diff_table(int table, const std::string& golden_dir, const HadamardOraclePolicy& policy = {});
TableDiff diff_tsv(int table, const std::string& produced, const std::string& golden);

}  // namespace bshm
