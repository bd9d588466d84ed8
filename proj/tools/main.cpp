#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_ops.hpp"

int main(int argc, char** argv) {
  CLI::App app{"stabilizers of quadratic refinements: coset enumeration, "
               "subgroup homology and truncated differential algebras"};
  app.require_subcommand(1);

  int exit_code = 0;
  quadstab::cli::CommonOpts common;

  std::string family;
  int genus = 0;
  int arf_value = 0;
  long long max_cosets = 1000000;
  std::string traversal = "bfs";
  std::string spec_path, spec_name;
  long long characteristic = -1;
  std::string slope = "2/3";
  long long intercept = -3;
  std::string pres_path;
  std::vector<std::string> words;
  std::string out_dir = ".";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--json", common.json_path, "write a JSON report here");
    cmd->add_flag("--provenance", common.provenance,
                  "attach catalog source tags to echoed inputs");
  };

  CLI::App* orbits =
      app.add_subcommand("orbits", "orbit sizes of the refinement action");
  orbits->add_option("--family", family, "mcg or sp")->required();
  orbits->add_option("--genus", genus, "genus")->required();
  add_common(orbits);
  orbits->callback([&] {
    exit_code = quadstab::cli::run_orbits(family, genus, common);
  });

  CLI::App* h1 = app.add_subcommand(
      "h1", "first homology of a basepoint stabilizer via the pipeline");
  h1->add_option("--family", family, "mcg or sp")->required();
  h1->add_option("--genus", genus, "genus")->required();
  h1->add_option("--arf", arf_value, "Arf value of the basepoint")
      ->required();
  h1->add_option("--max-cosets", max_cosets,
                 "coset definition budget (default 1000000)");
  h1->add_option("--traversal", traversal, "bfs or dfs (default bfs)");
  add_common(h1);
  h1->callback([&] {
    exit_code = quadstab::cli::run_h1(family, genus, arf_value, max_cosets,
                                      traversal, common);
  });

  CLI::App* cdga = app.add_subcommand(
      "cdga", "homology table and vanishing verdict of a truncated algebra");
  cdga->add_option("--spec", spec_path, "path to a spec file");
  cdga->add_option("--name", spec_name, "name of a shipped spec");
  cdga->add_option("--char", characteristic,
                   "override the coefficient characteristic (0 = rationals)");
  cdga->add_option("--slope", slope, "vanishing line slope num/den (default 2/3)");
  cdga->add_option("--intercept", intercept,
                   "claim: H = 0 when den*deg <= num*rank + intercept "
                   "(default -3)");
  add_common(cdga);
  cdga->callback([&] {
    exit_code = quadstab::cli::run_cdga(spec_path, spec_name, characteristic,
                                        slope, intercept, common);
  });

  CLI::App* abelian = app.add_subcommand(
      "abelian", "abelianization of a presentation file or catalog case");
  abelian->add_option("--pres", pres_path, "path to a presentation file");
  abelian->add_option("--family", family, "mcg or sp (catalog presentation)");
  abelian->add_option("--genus", genus, "genus for --family");
  abelian->add_option("--word", words,
                      "word to push through (repeatable)");
  add_common(abelian);
  abelian->callback([&] {
    exit_code =
        quadstab::cli::run_abelian(pres_path, family, genus, words, common);
  });

  CLI::App* exp = app.add_subcommand(
      "export", "write catalog presentations, JSON sidecars and spec files");
  exp->add_option("--out", out_dir, "output directory (default .)");
  exp->add_option("--family", family, "restrict to one family");
  exp->add_option("--genus", genus, "restrict to one genus");
  add_common(exp);
  exp->callback([&] {
    exit_code = quadstab::cli::run_export(out_dir, family, genus, common);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return exit_code;
}
