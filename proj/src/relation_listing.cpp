#include "relation_listing.hpp"

namespace slc::detail {

const std::vector<PrintedRelation>& p_table_n3() {
  static const std::vector<PrintedRelation> rows = {
      {"p12-p13", "[p_12, p_13]", "p_123 - p_132", ""},
      {"p12-p23", "[p_12, p_23]", "-(p_123 - p_132)", ""},
      {"p13-p23", "[p_13, p_23]", "p_123 - p_132", ""},
      {"p12-p123", "[p_12, p_123]", "p_12 (p_13 - p_23) - h_1 p_123", ""},
      {"p13-p123", "[p_13, p_123]", "p_13 (p_23 - p_12) + (h_1 + h_2) p_123", ""},
      {"p23-p123", "[p_23, p_123]", "p_23 (p_12 - p_13) - h_2 p_123", ""},
      {"p12-p132", "[p_12, p_132]", "-p_12 (p_13 - p_23) + h_1 p_132", ""},
      {"p13-p123 (second)", "[p_13, p_123]", "-p_13 (p_23 - p_12) - (h_1 + h_2) p_132", "repeated left side"},
      {"p23-p123 (second)", "[p_23, p_123]", "-p_23 (p_12 - p_13) + h_2 p_132", "repeated left side"},
      {"p123-p132", "[p_123, p_132]", "h_1 p_13 p_23 + h_2 p_12 p_13 - (h_1 + h_2) p_12 p_23", ""},
  };
  return rows;
}

const std::vector<PrintedRelation>& cfg_relations_n3() {
  static const std::vector<PrintedRelation> rows = {
      {"c12-c23", "[c_12, c_23]", "2 f_123", ""},
      {"c23-c13", "[c_23, c_13]", "2 f_123", ""},
      {"c13-c12", "[c_13, c_12]", "2 f_123", ""},
      {"c12-f123", "[c_12, f_123]", "(c_23 - c_13) c_12 + (c_1 - c_2) g_123", ""},
      {"c13-f123", "[c_13, f_123]", "(c_12 - c_23) c_13 + (c_3 - c_1) g_123", ""},
      {"c23-f123", "[c_23, f_123]", "(c_13 - c_12) c_23 + (c_2 - c_3) g_123", ""},
      {"c12-g123", "[c_12, g_123]", "(c_1 - c_2) f_123", ""},
      {"c13-g123", "[c_13, g_123]", "(c_3 - c_1) f_123", ""},
      {"c23-g123", "[c_23, g_123]", "(c_2 - c_3) f_123", ""},
      {"f123-g123", "[f_123, g_123]",
       "1/2 ((c_1 - c_3) c_12 c_23 + (c_3 - c_2) c_12 c_13 + (c_2 - c_1) c_13 c_23)", ""},
  };
  return rows;
}

const std::vector<PrintedRelation>& cfg_general_n3() {
  static const std::vector<PrintedRelation> rows = {
      {"cij-cjk", "[c_ij, c_jk]", "2 f_ijk", ""},
      {"cjk-fijk", "[c_jk, f_ijk]", "(c_ik - c_ij) c_jk + (c_j - c_k) g_ijk", ""},
      {"cjk-gijk", "[c_jk, g_ijk]", "(c_j - c_k) f_ijk", ""},
      {"fijk-gijk", "[f_ijk, g_ijk]",
       "1/2 ((c_i - c_k) c_ij c_jk + (c_k - c_j) c_ki c_ij + (c_j - c_i) c_jk c_ki)", ""},
  };
  return rows;
}

const std::vector<PrintedRelation>& rescaled_identities_n3() {
  static const std::vector<PrintedRelation> rows = {
      {"linear", "cb_1 + cb_2 + cb_3", "0", ""},
      {"quadratic", "cb_12 + cb_13 + cb_23", "cas_2 + cb_1^2 + cb_2^2 + cb_3^2", ""},
      {"cubic", "g_123 - cb_3 cb_12 - cb_2 cb_13 - cb_1 cb_23", "1/2 cas_3 + 5/3 (cb_1^3 + cb_2^3 + cb_3^3)", ""},
      {"dependency", "g_123^2 - f_123^2 - (cb_12 - (cb_1 - cb_2)^2) (cb_13 - (cb_1 - cb_3)^2) (cb_23 - (cb_2 - cb_3)^2)",
       "0", ""},
  };
  return rows;
}

const std::vector<PrintedRelation>& rescaled_brackets_n3() {
  static const std::string kleft =
      "f_123^2 + cb_12 cb_13 cb_23"
      " - (cb_3^2 cb_12^2 + cb_1^2 cb_23^2 + cb_2^2 cb_13^2)"
      " - ((cb_1^2 + cb_2^2) cb_13 cb_23 + (cb_2^2 + cb_3^2) cb_12 cb_13 + (cb_1^2 + cb_3^2) cb_12 cb_23)"
      " + ((cb_1 - cb_2)^2 (cb_1 - cb_3)^2 - cb_1 (cas_3 + 10/3 (cb_1^3 + cb_2^3 + cb_3^3))) cb_23"
      " + ((cb_2 - cb_1)^2 (cb_2 - cb_3)^2 - cb_2 (cas_3 + 10/3 (cb_1^3 + cb_2^3 + cb_3^3))) cb_13"
      " + ((cb_3 - cb_1)^2 (cb_3 - cb_2)^2 - cb_3 (cas_3 + 10/3 (cb_1^3 + cb_2^3 + cb_3^3))) cb_12";
  static const std::string kright =
      "1/4 cas_3^2 + 5/3 (cb_1^3 + cb_2^3 + cb_3^3) cas_3"
      " + 2 (cb_1^2 + cb_2^2) (cb_1^2 + cb_3^2) (cb_2^2 + cb_3^2)";
  static const std::string kquadratic =
      "f_123^2 + c_12 c_23 c_13 - (c_1 c_23 + c_2 c_13 + c_3 c_12) (g_123 - 1/4 (c_1 c_23 + c_2 c_13 + c_3 c_12))";
  static const std::vector<PrintedRelation> rows = {
      {"f123 from cb12,cb23", "f_123", "1/2 [cb_12, cb_23]", ""},
      {"f123 from cb23,cb13", "f_123", "1/2 [cb_23, cb_13]", ""},
      {"f123 from cb13,cb12", "f_123", "1/2 [cb_13, cb_12]", ""},
      {"cb12-f123", "[cb_12, f_123]",
       "(cb_23 - cb_13) cb_12 + (cb_1 - cb_2) (cas_3 + (cb_1 + cb_2) cas_2 - (cb_1 + cb_2)^3)", ""},
      {"cb13-f123", "[cb_13, f_123]",
       "(cb_12 - cb_23) cb_13 + (cb_3 - cb_1) (cas_3 + (cb_1 + cb_3) cas_2 - (cb_1 + cb_3)^3)", ""},
      {"cb23-f123", "[cb_23, f_123]",
       "(cb_13 - cb_12) cb_23 + (cb_2 - cb_3) (cas_3 + (cb_2 + cb_3) cas_2 - (cb_2 + cb_3)^3)", ""},
      {"cb12-g123", "[cb_12, g_123]", "2 (cb_1 - cb_2) f_123", ""},
      {"cb13-g123", "[cb_13, g_123]", "2 (cb_3 - cb_1) f_123", ""},
      {"cb23-g123", "[cb_23, g_123]", "2 (cb_2 - cb_3) f_123", ""},
      {"f123-g123", "[f_123, g_123]",
       "(cb_1 - cb_3) cb_12 cb_23 + (cb_3 - cb_2) cb_12 cb_13 + (cb_2 - cb_1) cb_13 cb_23"
       " - (cb_1 - cb_2) (cb_2 - cb_3) (cb_3 - cb_1) (cas_2 - 1/3 ((cb_1 - cb_2)^2 + (cb_1 - cb_2) (cb_2 - cb_3)"
       " + (cb_2 - cb_3)^2))",
       ""},
      {"sum-f123", "[cb_12 + cb_13 + cb_23, f_123]", "0", ""},
      {"sum-g123", "[cb_12 + cb_13 + cb_23, g_123]", "0", ""},
      {"casimir sides", kleft, kright, "sums over i != j != k taken over the three distinct terms"},
      {"casimir left side", kleft, kquadratic, "compared with the unrescaled quadratic-algebra Casimir"},
      {"casimir right side", kright, kquadratic, "compared with the unrescaled quadratic-algebra Casimir"},
  };
  return rows;
}

const std::vector<PrintedRelation>& cubic_listing_n4() {
  static const std::vector<PrintedRelation> rows = {
      // two-index brackets
      {"cij-ckl", "[c_ij, c_kl]", "0", ""},
      {"cij-cjk", "[c_ij, c_jk]", "2 f_ijk", ""},
      // two with three indices; the printed block repeats these four lines verbatim
      {"cjk-fijk", "[c_jk, f_ijk]", "(c_ik - c_ij) c_jk + (c_j - c_k) g_ijk", "printed twice"},
      {"cjk-gijk", "[c_jk, g_ijk]", "(c_j - c_k) f_ijk", "printed twice"},
      {"ckl-fijk", "[c_kl, f_ijk]", "g_ijlk - g_ijkl", "printed twice"},
      {"ckl-gijk", "[c_kl, g_ijk]", "f_ijlk - f_ijkl", "printed twice"},
      // three with three indices
      {"fijk-gijk", "[f_ijk, g_ijk]",
       "1/2 ((c_i - c_k) c_ij c_jk + (c_k - c_j) c_ki c_ij + (c_j - c_i) c_jk c_ki)", ""},
      {"fijk-fjkl", "[f_ijk, f_jkl]",
       "1/2 ((c_ij - c_ki) f_jkl + (c_kl - c_jl) f_ijk + (f_ilj + f_ilk) c_jk + (c_j - c_k) f_ijlk)", ""},
      {"gijk-gjkl", "[g_ijk, g_jkl]",
       "1/2 ((c_ij - c_ki) f_jkl + (c_kl - c_jl) f_ijk + (f_ijl + f_ikl) c_jk + (c_j - c_k) f_iklj)", ""},
      {"fijk-gjkl", "[f_ijk, g_jkl]",
       "1/2 ((c_ij - c_ki) g_jkl + (c_kl - c_jl) g_ijk + (g_ijl - g_ikl) c_jk + (c_k - c_j) g_iklj)",
       "unbalanced printed parenthesis read as an overall factor 1/2"},
      // two with four indices
      {"ckl-fijkl", "[c_kl, f_ijkl]", "(g_ilj - g_ikj) c_kl + (c_k - c_l) g_ijkl", ""},
      {"ckl-fijlk", "[c_kl, f_ijlk]", "(g_ikj - g_ilj) c_kl + (c_l - c_k) g_ijlk", ""},
      {"ckl-filjk", "[c_kl, f_iljk]", "(c_jl - c_jk) g_ikl + (c_ik - c_il) g_jkl", ""},
      {"ckl-gijkl", "[c_kl, g_ijkl]", "(f_ijl - f_ijk) c_kl + (c_k - c_l) f_ijkl", ""},
      {"ckl-gijlk", "[c_kl, g_ijlk]", "(f_ijk - f_ijl) c_kl + (c_l - c_k) f_ijlk", ""},
      {"ckl-giljk", "[c_kl, g_iljk]", "(c_jk - c_jl) f_ikl + (c_ik - c_il) f_jkl", ""},
      // three with four indices
      {"fjkl-fijkl", "[f_jkl, f_ijkl]",
       "1/2 ((c_jk - c_kl) f_ijkl + (g_ikl - g_ijk) f_jkl + (f_ikl - f_ijk) g_jkl"
       " + ((c_l - c_k) c_jk + (c_k - c_j) c_kl) f_ijl)",
       ""},
      {"fjkl-fijlk", "[f_jkl, f_ijlk]",
       "1/2 ((c_kl - c_jl) f_ijlk + (g_ikl - g_ijl) f_jkl + (f_ijl + f_ikl) g_jkl"
       " + ((c_j - c_l) c_kl + (c_l - c_k) c_jl) f_ijk)",
       ""},
      {"fjkl-filjk", "[f_jkl, f_iljk]",
       "1/2 ((c_jl - c_jk) f_iljk + (g_ijk - g_ijl) f_jkl + (f_ijk + f_ijl) g_jkl"
       " + ((c_j - c_k) c_jl + (c_l - c_j) c_jk) f_ikl)",
       ""},
      {"gjkl-gijkl", "[g_jkl, g_ijkl]",
       "1/2 ((c_jk - c_kl) f_ijkl + (g_ikl - g_ijk) f_jkl + (f_ikl - f_ijk) g_jkl"
       " + ((c_k - c_l) c_jk + (c_j - c_k) c_kl) f_ijl)",
       ""},
      {"gjkl-gijlk", "[g_jkl, g_ijlk]",
       "1/2 ((c_jl - c_kl) f_ijlk + (g_ijl - g_ikl) f_jkl - (f_ijl + f_ikl) g_jkl"
       " + ((c_j - c_l) c_kl + (c_l - c_k) c_jl) f_ijk)",
       ""},
      {"gjkl-giljk", "[g_jkl, g_iljk]",
       "1/2 ((c_jl - c_jk) f_iljk + (g_ijk - g_ijl) f_jkl + (f_ijk + f_ijl) g_jkl"
       " + ((c_k - c_j) c_jl + (c_j - c_l) c_jk) f_ikl)",
       ""},
      {"fjkl-gijkl", "[f_jkl, g_ijkl]",
       "1/2 ((c_jk - c_kl) g_ijkl + (c_ij - c_il) c_jk c_kl + (f_ikl - f_ijk) f_jkl + (g_ikl - g_ijk) g_jkl"
       " + ((c_k - c_j) c_kl + (c_l - c_k) c_jk) g_ijl)",
       "printed twice"},
      {"fjkl-gijlk", "[f_jkl, g_ijlk]",
       "1/2 ((c_kl - c_jl) g_ijlk + (c_ik - c_ij) c_jl c_kl - (f_ijl + f_ikl) f_jkl + (g_ijl - g_ikl) g_jkl"
       " + ((c_j - c_l) c_kl + (c_l - c_k) c_jl) g_ijk)",
       ""},
      {"fjkl-giljk", "[f_jkl, g_iljk]",
       "1/2 ((c_jl - c_jk) g_iljk + (c_il - c_ik) c_jk c_jl + (f_ijk + f_ijl) f_jkl + (g_ijk - g_ijl) g_jkl"
       " + ((c_j - c_l) c_jk + (c_k - c_l) c_jl) g_ikl)",
       "",
       "1/2 ((c_jl - c_jk) g_iljk + (c_il - c_ik) c_jk c_jl + (f_ijk + f_ijl) f_jkl + (g_ijk - g_ijl) g_jkl"
       " + ((c_j - c_l) c_jk + (c_k - c_j) c_jl) g_ikl)"},
      {"gjkl-fijkl", "[g_jkl, f_ijkl]",
       "1/2 ((c_jk - c_kl) g_ijkl + (c_il - c_ij) c_jk c_kl + (f_ikl - f_ijk) f_jkl + (g_ikl - g_ijk) g_jkl"
       " + ((c_j - c_k) c_kl + (c_k - c_l) c_jk) g_ijl)",
       ""},
      {"gjkl-fijlk", "[g_jkl, f_ijlk]",
       "1/2 ((c_jl - c_kl) g_ijlk + (c_ik - c_ij) c_jl c_kl + (f_ijl + f_ikl) f_jkl + (g_ikl - g_ijl) g_jkl"
       " + ((c_j - c_l) c_kl + (c_l - c_k) c_jl) g_ijk)",
       ""},
      {"gjkl-filjk", "[g_jkl, f_iljk]",
       "1/2 ((c_jl - c_jk) g_iljk + (c_il - c_ik) c_jk c_jl + (f_ijk + f_ijl) f_jkl + (g_ijk - g_ijl) g_jkl"
       " + ((c_j - c_l) c_jk + (c_k - c_l) c_jl) g_ikl)",
       "",
       "1/2 ((c_jl - c_jk) g_iljk + (c_ik - c_il) c_jk c_jl + (f_ijk + f_ijl) f_jkl + (g_ijk - g_ijl) g_jkl"
       " + ((c_l - c_j) c_jk + (c_j - c_k) c_jl) g_ikl)"},
      // four with four indices
      {"fijkl-fijlk", "[f_ijkl, f_ijlk]",
       "1/2 (((c_jk + c_jl - c_kl) f_ikl + (c_kl - c_ik - c_il) f_jkl) c_ij"
       " + ((c_ij - c_il - c_jl) f_ijk + (c_ik + c_jk - c_ij) f_ijl) c_kl"
       " + (c_i - c_j) (f_ikl g_jkl + f_jkl g_ikl) + (c_l - c_k) (f_ijk g_ijl + f_ijl g_ijk))",
       ""},
      {"fijkl-filjk", "[f_ijkl, f_iljk]",
       "1/2 (((c_ik + c_kl - c_il) f_ijl + (c_il - c_ij - c_jl) f_ikl) c_jk"
       " + ((c_jl + c_kl - c_jk) f_ijk + (c_jk - c_ij - c_ik) f_jkl) c_il"
       " + (c_i - c_l) (f_ijk g_jkl + f_jkl g_ijk) + (c_j - c_k) (f_ikl g_ijl + f_ijl g_ikl))",
       ""},
      {"fijlk-filjk", "[f_ijlk, f_iljk]",
       "1/2 (((c_ik - c_il - c_kl) f_ijk + (c_ik - c_ij - c_jk) f_ikl) c_jl"
       " + ((c_jl - c_jk - c_kl) f_ijl + (c_jl - c_ij - c_il) f_jkl) c_ik"
       " + (c_i - c_k) (f_jkl g_ijl - f_ijl g_jkl) + (c_l - c_j) (f_ijk g_ikl - f_ikl g_ijk))",
       ""},
      {"gijkl-gijlk", "[g_ijkl, g_ijlk]",
       "1/2 (((c_kl - c_jk - c_jl) f_ikl + (c_ik + c_il - c_kl) f_jkl) c_ij"
       " + ((c_ij - c_il - c_jl) f_ijk + (c_ik + c_jk - c_ij) f_ijl) c_kl"
       " + (c_j - c_i) (f_ikl g_jkl + f_jkl g_ikl) + (c_l - c_k) (f_ijl g_ijk + f_ijk g_ijl))",
       ""},
      {"gijkl-giljk", "[g_ijkl, g_iljk]",
       "1/2 (((c_il - c_ik - c_kl) f_ijl + (c_ij + c_jl - c_il) f_ikl) c_jk"
       " + ((c_jl + c_kl - c_jk) f_ijk + (c_jk - c_ij - c_ik) f_jkl) c_il"
       " + (c_i - c_l) (f_ijk g_jkl + f_jkl g_ijk) + (c_k - c_j) (f_ikl g_ijl + f_ijl g_ikl))",
       ""},
      {"gijlk-giljk", "[g_ijlk, g_iljk]",
       "((c_ik - c_il - c_kl) f_ijk + (c_ik - c_ij - c_jk) f_ikl) c_jl"
       " + ((c_jk + c_kl - c_jl) f_ijl + (c_ij + c_il - c_jl) f_jkl) c_ik"
       " + (c_k - c_i) (f_jkl g_ijl - f_ijl g_jkl) + (c_l - c_j) (f_ijk g_ikl - f_ikl g_ijk)",
       "printed without the factor 1/2 of the neighbouring lines",
       "1/2 (((c_ik - c_il - c_kl) f_ijk + (c_ik - c_ij - c_jk) f_ikl) c_jl"
       " + ((c_jk + c_kl - c_jl) f_ijl + (c_ij + c_il - c_jl) f_jkl) c_ik"
       " + (c_k - c_i) (f_jkl g_ijl - f_ijl g_jkl) + (c_l - c_j) (f_ijk g_ikl - f_ikl g_ijk))"},
      {"fijkl-gijkl", "[f_ijkl, g_ijkl]",
       "1/2 (((c_i - c_l) c_ij - (c_i - c_j) c_il) c_jk c_kl + ((c_l - c_k) c_jk + (c_k - c_j) c_kl) c_ij c_il)", ""},
      {"fijkl-gijlk", "[f_ijkl, g_ijlk]",
       "1/2 (((c_kl - c_jk - c_jl) g_ikl + (c_ik + c_il - c_kl) g_jkl) c_ij"
       " + ((c_ij - c_il - c_jl) g_ijk + (c_il + c_jk - c_ij) g_ijl) c_kl"
       " + (c_l - c_k) (f_ijk f_ijl + g_ijk g_ijl) + (c_j - c_i) (f_ikl f_jkl + g_ikl g_jkl))",
       "",
       "1/2 (((c_kl - c_jk - c_jl) g_ikl + (c_ik + c_il - c_kl) g_jkl) c_ij"
       " + ((c_ij - c_il - c_jl) g_ijk + (c_ik + c_jk - c_ij) g_ijl) c_kl"
       " + (c_l - c_k) (f_ijk f_ijl + g_ijk g_ijl) + (c_j - c_i) (f_ikl f_jkl + g_ikl g_jkl))"},
      {"fijkl-giljk", "[f_ijkl, g_iljk]",
       "1/2 (((c_il - c_ik - c_kl) g_ijl + (c_ij - c_il + c_jl) g_ikl) c_jk"
       " + ((c_jl + c_kl - c_jk) g_ijk + (c_jk - c_ij - c_ik) g_jkl) c_il"
       " + (c_k - c_j) (f_ijl f_ikl + g_ijl g_ikl) + (c_i - c_l) (f_ijk f_jkl + g_ijk g_jkl))",
       ""},
      {"fijlk-gijkl", "[f_ijlk, g_ijkl]",
       "1/2 (((c_kl - c_jk - c_jl) g_ikl + (c_ik + c_il - c_kl) g_jkl) c_ij"
       " + ((c_il + c_jl - c_ij) g_ijk + (c_ij - c_ik - c_jk) g_ijl) c_kl"
       " + (c_k - c_l) (f_ijk f_ijl + g_ijk g_ijl) + (c_j - c_i) (f_ikl f_jkl + g_ikl g_jkl))",
       ""},
      {"fijlk-giljk", "[f_ijlk, g_iljk]",
       "1/2 (((c_ik - c_il - c_kl) g_ijk + (c_ij - c_ik + c_jk) g_ikl) c_jl"
       " + ((c_jk - c_jl + c_kl) g_ijl + (c_jl - c_ij - c_il) g_jkl) c_ik"
       " + (c_j - c_l) (f_ijk f_ikl - g_ijk g_ikl) + (c_k - c_i) (f_ijl f_jkl - g_ijl g_jkl))",
       ""},
      {"filjk-gijkl", "[f_iljk, g_ijkl]",
       "1/2 (((c_jk - c_jl - c_kl) g_ijk + (c_ij + c_ik - c_jk) g_jkl) c_il"
       " + ((c_il - c_ik - c_kl) g_ijl + (c_ij - c_il + c_jl) g_ikl) c_jk"
       " + (c_l - c_i) (f_ijk f_jkl + g_ijk g_jkl) + (c_k - c_j) (f_ijl f_ikl + g_ijl g_ikl))",
       ""},
      {"filjk-gijlk", "[f_iljk, g_ijlk]",
       "1/2 (((c_jk - c_jl + c_kl) g_ijl + (c_jl - c_ij - c_il) g_jkl) c_ik"
       " + ((c_il + c_kl - c_ik) g_ijk + (c_ik - c_ij - c_jk) g_ikl) c_jl"
       " + (c_l - c_j) (f_ijk f_ikl - g_ijk g_ikl) + (c_k - c_i) (f_jkl f_ijl - g_jkl g_ijl))",
       ""},
  };
  return rows;
}

}  // namespace slc::detail
