#pragma once

#include <string>
#include <string_view>

namespace sdw::cli {

// Argument codes: r ring, m module (a ring name stands for the ring as a
// module over itself), n integer, p list of polynomials, d list of integers;
// a trailing + repeats the last code.
struct Signature {
  std::string_view name;
  std::string_view args;
  std::string_view help;
};

inline constexpr Signature kModuleFunctions[] = {
    {"ext", "nmm", "Ext^i(M, N)"},
    {"canonical", "r", "canonical module of a Cohen-Macaulay ring"},
    {"jls", "rr", "Ext^{dim S - dim R}_S(R, S) for R a quotient of S"},
    {"residue_field", "r", "k = R/m"},
    {"free", "rd", "free module with the given generator degrees"},
    {"syzygy", "mn", "i-th syzygy module in a minimal resolution"},
    {"transpose", "mm", "Tr_C M"},
    {"hom", "mm", "Hom(M, N)"},
    {"restrict", "mr", "the same presentation read over a quotient ring"},
    {"twist", "mn", "M(s)"},
    {"sum", "m+", "direct sum"},
    {"random", "rn", "seeded random cokernel"},
};

inline constexpr Signature kChecks[] = {
    {"semidualizing", "m", "homothety iso and Ext^{1..B}(C, C) = 0"},
    {"isomorphic", "mm", "graded isomorphism"},
    {"isomorphic_local", "mm", "isomorphism at the irrelevant ideal, twists ignored"},
    {"cohen_macaulay", "m", "depth equals dimension"},
    {"gorenstein", "r", "Cohen-Macaulay with cyclic canonical module"},
    {"locally_gorenstein", "rp", "R_p Gorenstein at the prime p"},
    {"g_condition", "rmn", "(G_n^C)"},
    {"dim", "mn", "Krull dimension equals n"},
    {"depth", "mn", "depth equals n"},
    {"mu", "mn", "minimal number of generators equals n"},
    {"serre", "mn", "(S_n)"},
    {"torsionfree", "mmn", "n-C-torsionfree"},
    {"pushforward", "mmn", "certified n-step universal pushforward"},
    {"syzygy", "mmn", "n-C-syzygy"},
    {"totally_reflexive", "mm", "totally C-reflexive up to the bound"},
    {"ext_vanishing", "mm", "Ext^{1..B}(M, N) = 0"},
    {"auslander_buchsbaum", "m", "depth + pd = number of variables over the ambient ring"},
    {"resolution", "mn", "d o d = 0 and exactness of the resolution up to length n"},
    {"tf_battery", "rmn", "torsionfree, pushforward and (S_n) agree on the standard modules"},
    {"lambda_battery", "rm", "torsionfreeness against injectivity and bijectivity of lambda"},
    {"ext_shift", "rm", "Ext shift along one-step pushforwards"},
    {"lg_check", "rmn", "(G_{n-1}^C) iff omega is an n-C-syzygy"},
    {"cross_semidualizing", "rmmn", "n-C- and n-C'-torsionfree agree"},
    {"oracle", "rn", "Hom/Ext against the dense oracle (Artinian rings)"},
};

template <std::size_t N>
const Signature* find_signature(const Signature (&table)[N], std::string_view name) {
  for (const auto& s : table)
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace sdw::cli
