#pragma once

#include <string>
#include <vector>

namespace slc::detail {

/// A transcribed relation: `lhs` is a bracket template such as
/// "[c_jk, f_ijk]", `rhs` its printed right-hand side. `note` records
/// transcription choices (repaired parentheses, repeated lines).
/// `corrected` is an amended right-hand side tried when the printed one
/// fails; it is reported next to the printed form, never substituted.
struct PrintedRelation {
  std::string label;
  std::string lhs;
  std::string rhs;
  std::string note;
  std::string corrected = {};
};

/// n = 3 p-basis bracket table, in printed order with printed left sides.
const std::vector<PrintedRelation>& p_table_n3();

/// n = 3 c/f/g relations with explicit indices.
const std::vector<PrintedRelation>& cfg_relations_n3();

/// n = 3 c/f/g relations in general index form over i, j, k.
const std::vector<PrintedRelation>& cfg_general_n3();

/// n = 3 identities in the rescaled basis cb_i = c_i/2,
/// cb_ij = c_ij + (c_i - c_j)^2/4, with cas_k the trace Casimirs.
const std::vector<PrintedRelation>& rescaled_identities_n3();

/// n = 3 brackets and Casimir expressions in the rescaled basis.
const std::vector<PrintedRelation>& rescaled_brackets_n3();

/// n = 4 c/f/g cubic relation listing over i, j, k, l.
const std::vector<PrintedRelation>& cubic_listing_n4();

}  // namespace slc::detail
