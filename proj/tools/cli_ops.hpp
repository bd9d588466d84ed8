#pragma once

#include <optional>
#include <string>
#include <vector>

namespace quadstab::cli {

struct CommonOpts {
  std::string json_path;  // empty = no JSON output
  bool provenance = false;
};

int run_orbits(const std::string& family, int genus, const CommonOpts& opts);

int run_h1(const std::string& family, int genus, int arf_value,
           long long max_cosets, const std::string& traversal,
           const CommonOpts& opts);

// Exactly one of spec_path / spec_name is non-empty. characteristic: -1
// keeps the spec's own field, otherwise the homology is computed after
// replacing it (0 = rationals). slope is "num/den"; intercept c means the
// claim "H vanishes at every bidegree with den*deg <= num*rank + c".
int run_cdga(const std::string& spec_path, const std::string& spec_name,
             long long characteristic, const std::string& slope,
             long long intercept, const CommonOpts& opts);

int run_abelian(const std::string& pres_path, const std::string& family,
                int genus, const std::vector<std::string>& words,
                const CommonOpts& opts);

int run_export(const std::string& out_dir, const std::string& family,
               int genus, const CommonOpts& opts);

}  // namespace quadstab::cli
