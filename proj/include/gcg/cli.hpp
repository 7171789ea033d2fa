#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gcg/perm_group.hpp"

namespace gcg {

/// A group named on the command line together with the normal subgroups it knows by name.
struct ResolvedGroup {
  std::string label;
  PermGroup g;
  std::vector<std::pair<std::string, Subgroup>> named;
  std::string default_normal = "G";
};

/// sym:n, cyc:n, dih:n, alt:n, ea:p,k, q8, agl1:8, ex1, ex2, file:<path>[#<subgroup>].
/// Throws ValidationError for an unknown spec, GroupError or std::runtime_error for file problems.
ResolvedGroup resolve_group_spec(const std::string& spec);

/// G, Z, 1, any name carried by the spec, or n<i> for the i-th entry of normal_subgroups(G).
Subgroup find_normal(const ResolvedGroup& group, const std::string& name);

/// The text printed by `analyze`.
std::string analyze_text(const ResolvedGroup& group, const std::string& normal_name);

/// Exit status: 0 all verified or vacuous, 1 counterexample found, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcg
