#include "quadstab/pipeline.hpp"

#include <optional>
#include <utility>

#include "quadstab/errors.hpp"

namespace quadstab {

namespace {

std::vector<ClassReport> report_classes(const GroupCase& gc,
                                        std::optional<int> arf_value,
                                        const CosetTable* table,
                                        const AbelianStructure& homology) {
  std::vector<ClassReport> reports;
  for (const auto& c : gc.classes) {
    if (c.arf != arf_value) continue;
    Word rewritten =
        table ? rewrite_subgroup_word(*table, c.representative)
              : c.representative;
    reports.push_back(ClassReport{c.name, c.representative, rewritten,
                                  homology.image(rewritten),
                                  element_order(homology, rewritten),
                                  c.source});
  }
  return reports;
}

}  // namespace

PipelineResult stabilizer_pipeline(const GroupCase& gc, int arf_value,
                                   int max_cosets, Traversal traversal) {
  if (arf_value != 0 && arf_value != 1)
    throw InvalidArgument("arf value must be 0 or 1");
  bool explicit_words = !gc.subgroup_words.at(arf_value).empty();
  CosetTable table =
      explicit_words
          ? todd_coxeter(gc.presentation, gc.subgroup_words[arf_value],
                         max_cosets, traversal)
          : coset_table_from_action(gc.refinement_action(arf_value),
                                    gc.basepoint_index(arf_value), traversal);
  Presentation subgroup = reidemeister_schreier(gc.presentation, table);
  AbelianStructure homology = abelianization(subgroup);
  std::vector<ClassReport> classes =
      report_classes(gc, arf_value, &table, homology);
  return PipelineResult{gc.family,       gc.genus, arf_value,
                        explicit_words,  table,    table.n_cosets,
                        std::move(subgroup), std::move(homology),
                        std::move(classes)};
}

AmbientReport ambient_homology(const GroupCase& gc) {
  AbelianStructure homology = abelianization(gc.presentation);
  std::vector<ClassReport> classes =
      report_classes(gc, std::nullopt, nullptr, homology);
  return AmbientReport{std::move(homology), std::move(classes)};
}

}  // namespace quadstab
