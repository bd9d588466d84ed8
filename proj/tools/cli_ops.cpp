#include "cli_ops.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "quadstab/catalog.hpp"
#include "quadstab/cdga.hpp"
#include "quadstab/errors.hpp"
#include "quadstab/pipeline.hpp"

#ifndef QUADSTAB_VERSION
#define QUADSTAB_VERSION "0.0.0"
#endif

namespace quadstab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Family need_family(const std::string& text) {
  auto f = parse_family(text);
  if (!f) throw UnknownCase("unknown family " + text);
  return *f;
}

Traversal need_traversal(const std::string& text) {
  if (text == "bfs") return Traversal::BFS;
  if (text == "dfs") return Traversal::DFS;
  throw InvalidArgument("traversal must be bfs or dfs");
}

std::string group_name(const AbelianStructure& h) {
  std::vector<std::string> parts;
  if (h.free_rank() == 1)
    parts.push_back("Z");
  else if (h.free_rank() > 1)
    parts.push_back("Z^" + std::to_string(h.free_rank()));
  for (const auto& d : h.torsion()) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string order_name(const ElementOrder& o) {
  return is_infinite(o) ? "infinite" : std::get<mpz_class>(o).get_str();
}

ordered_json coords_json(const std::vector<mpz_class>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

void attach_case_provenance(ordered_json& inputs, const GroupCase& gc) {
  ordered_json prov = ordered_json::object();
  for (const auto& [key, tag] : gc.sources) prov[key] = tag;
  inputs["provenance"] = prov;
}

// emits the report: text already printed by caller; here only JSON
void finish_report(const CommonOpts& opts, const std::string& command,
                   ordered_json inputs, ordered_json results,
                   const Timer& timer) {
  if (opts.json_path.empty()) return;
  ordered_json report;
  report["command"] = command;
  report["version"] = QUADSTAB_VERSION;
  report["inputs"] = std::move(inputs);
  report["results"] = std::move(results);
  report["timing_ms"] = timer.ms();
  std::ofstream out(opts.json_path);
  if (!out) throw InvalidArgument("cannot write " + opts.json_path);
  out << report.dump(2) << "\n";
}

int guard(const std::function<int()>& body) {
  try {
    return body();
  } catch (const UnknownCase& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CosetLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const UnknownGenerator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const IllFormedQuotient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const TruncationExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}

ordered_json class_report_json(const ClassReport& r, bool provenance) {
  ordered_json c;
  c["name"] = r.name;
  c["word"] = serialize_word(r.representative);
  c["coordinates"] = coords_json(r.coordinates);
  c["order"] = order_name(r.order);
  if (provenance) c["source"] = r.source;
  return c;
}

}  // namespace

int run_orbits(const std::string& family, int genus, const CommonOpts& opts) {
  return guard([&] {
    Timer timer;
    Family fam = need_family(family);
    ordered_json inputs;
    inputs["family"] = family_name(fam);
    inputs["genus"] = genus;
    ordered_json results;
    if (genus == 0) {
      // the unique empty refinement; no catalog case backs it
      std::cout << "case " << family_name(fam) << "-g0\n";
      std::cout << "total: 1\n";
      results["total"] = 1;
    } else {
      const GroupCase& gc = get_case(fam, genus);
      if (opts.provenance) attach_case_provenance(inputs, gc);
      std::cout << "case " << case_id(fam, genus) << "\n";
      for (int a = 0; a < 2; ++a) {
        Orbit orb = orbit(gc.refinement_action(a), gc.basepoint_index(a));
        std::cout << "arf " << a << ": orbit size " << orb.points.size()
                  << "\n";
        results["arf" + std::to_string(a)] = orb.points.size();
      }
    }
    finish_report(opts, "orbits", std::move(inputs), std::move(results),
                  timer);
    return 0;
  });
}

int run_h1(const std::string& family, int genus, int arf_value,
           long long max_cosets, const std::string& traversal,
           const CommonOpts& opts) {
  return guard([&] {
    Timer timer;
    Family fam = need_family(family);
    Traversal trav = need_traversal(traversal);
    const GroupCase& gc = get_case(fam, genus);
    PipelineResult res =
        stabilizer_pipeline(gc, arf_value, static_cast<int>(max_cosets), trav);

    std::cout << "case " << case_id(fam, genus) << "  arf " << arf_value
              << "\n";
    std::cout << "route: "
              << (res.used_explicit_words ? "todd-coxeter" : "action")
              << "\n";
    std::cout << "index " << res.index << "\n";
    std::cout << "H1 = " << group_name(res.homology) << "\n";
    for (const auto& c : res.classes) {
      std::cout << "class " << c.name << " = "
                << serialize_word(c.representative) << "  order "
                << order_name(c.order) << "\n";
    }

    ordered_json inputs;
    inputs["family"] = family_name(fam);
    inputs["genus"] = genus;
    inputs["arf"] = arf_value;
    inputs["max_cosets"] = max_cosets;
    inputs["traversal"] = traversal;
    if (opts.provenance) attach_case_provenance(inputs, gc);

    ordered_json results;
    results["route"] =
        res.used_explicit_words ? "todd-coxeter" : "action";
    results["index"] = res.index;
    results["free_rank"] = res.homology.free_rank();
    ordered_json torsion = ordered_json::array();
    for (const auto& d : res.homology.torsion()) torsion.push_back(d.get_str());
    results["torsion"] = torsion;
    results["group"] = group_name(res.homology);
    ordered_json classes = ordered_json::array();
    for (const auto& c : res.classes)
      classes.push_back(class_report_json(c, opts.provenance));
    results["classes"] = classes;
    finish_report(opts, "h1", std::move(inputs), std::move(results), timer);
    return 0;
  });
}

int run_cdga(const std::string& spec_path, const std::string& spec_name,
             long long characteristic, const std::string& slope,
             long long intercept, const CommonOpts& opts) {
  return guard([&] {
    Timer timer;
    if (spec_path.empty() == spec_name.empty())
      throw InvalidArgument("pass exactly one of --spec and --name");

    long long num = 0, den = 0;
    {
      std::istringstream in(slope);
      char sep = 0;
      if (!(in >> num >> sep >> den) || sep != '/' || den <= 0 || num < 0)
        throw InvalidArgument("slope must look like 2/3");
    }

    std::string text;
    std::string source_tag;
    if (!spec_name.empty()) {
      text = cdga_spec_text(spec_name);
      source_tag = "catalog:cdga/" + spec_name;
    } else {
      std::ifstream in(spec_path);
      if (!in) throw InvalidArgument("cannot read " + spec_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
      source_tag = "file:" + spec_path;
    }

    CdgaSpec spec = parse_cdga_spec(text);
    if (characteristic >= 0) spec = with_characteristic(spec, characteristic);
    HomologyTable table = homology_table(spec);
    VanishingReport report = check_vanishing(table, num, den, intercept);

    std::cout << "spec " << (spec_name.empty() ? spec_path : spec_name)
              << " (char " << spec.characteristic() << ", trunc rank "
              << spec.max_rank() << " deg " << spec.max_degree() << ")\n";
    std::cout << "reliable window: rank <= " << table.reliable_rank
              << ", deg <= " << table.reliable_degree << "\n";
    for (const auto& [bd, dim] : table.dims) {
      if (dim == 0) continue;
      std::cout << "dim H(" << bd.rank << "," << bd.arf << "," << bd.degree
                << ") = " << dim << "\n";
    }
    std::cout << "vanishing (" << den << "*deg <= " << num << "*rank + "
              << intercept << "): " << (report.verdict ? "true" : "false")
              << "\n";
    if (!report.verdict) {
      std::cout << "violations:";
      for (const auto& bd : report.violations)
        std::cout << " (" << bd.rank << "," << bd.arf << "," << bd.degree
                  << ")";
      std::cout << "\n";
    }

    ordered_json inputs;
    inputs["spec"] = spec_name.empty() ? spec_path : spec_name;
    inputs["characteristic"] = spec.characteristic();
    inputs["slope"] = slope;
    inputs["intercept"] = intercept;
    if (opts.provenance) {
      ordered_json prov;
      prov["spec"] = source_tag;
      inputs["provenance"] = prov;
    }

    ordered_json results;
    results["reliable_rank"] = table.reliable_rank;
    results["reliable_degree"] = table.reliable_degree;
    ordered_json dims = ordered_json::array();
    for (const auto& [bd, dim] : table.dims) {
      if (dim == 0) continue;
      ordered_json row;
      row["rank"] = bd.rank;
      row["arf"] = bd.arf;
      row["deg"] = bd.degree;
      row["dim"] = dim;
      dims.push_back(row);
    }
    results["dims"] = dims;
    results["verdict"] = report.verdict;
    ordered_json viols = ordered_json::array();
    for (const auto& bd : report.violations)
      viols.push_back(ordered_json::array({bd.rank, bd.arf, bd.degree}));
    results["violations"] = viols;
    finish_report(opts, "cdga", std::move(inputs), std::move(results), timer);
    return 0;
  });
}

int run_abelian(const std::string& pres_path, const std::string& family,
                int genus, const std::vector<std::string>& words,
                const CommonOpts& opts) {
  return guard([&] {
    Timer timer;
    if (pres_path.empty() == family.empty())
      throw InvalidArgument("pass exactly one of --pres and --family");

    Presentation pres{{}, {}};
    std::string source_tag;
    if (!pres_path.empty()) {
      std::ifstream in(pres_path);
      if (!in) throw InvalidArgument("cannot read " + pres_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      pres = parse_presentation(buf.str());
      source_tag = "file:" + pres_path;
    } else {
      const GroupCase& gc = get_case(need_family(family), genus);
      pres = gc.presentation;
      source_tag = gc.sources.at("presentation");
    }

    AbelianStructure h = abelianization(pres);
    std::cout << "H1 = " << group_name(h) << "\n";

    ordered_json word_rows = ordered_json::array();
    for (const auto& w_text : words) {
      Word w = parse_word(w_text);
      auto coords = h.image(w);
      auto order = element_order(h, w);
      std::cout << "word " << w_text << "  order " << order_name(order)
                << "\n";
      ordered_json row;
      row["word"] = w_text;
      row["coordinates"] = coords_json(coords);
      row["order"] = order_name(order);
      word_rows.push_back(row);
    }

    ordered_json inputs;
    inputs["presentation"] =
        pres_path.empty() ? case_id(need_family(family), genus) : pres_path;
    if (opts.provenance) {
      ordered_json prov;
      prov["presentation"] = source_tag;
      inputs["provenance"] = prov;
    }
    ordered_json results;
    results["free_rank"] = h.free_rank();
    ordered_json torsion = ordered_json::array();
    for (const auto& d : h.torsion()) torsion.push_back(d.get_str());
    results["torsion"] = torsion;
    results["group"] = group_name(h);
    results["words"] = word_rows;
    finish_report(opts, "abelian", std::move(inputs), std::move(results),
                  timer);
    return 0;
  });
}

namespace {

ordered_json refinement_json(const QuadraticRefinement& q) {
  ordered_json arr = ordered_json::array();
  for (int b : q.values()) arr.push_back(b);
  return arr;
}

ordered_json case_sidecar(const GroupCase& gc) {
  ordered_json j;
  j["id"] = case_id(gc.family, gc.genus);
  j["family"] = family_name(gc.family);
  j["genus"] = gc.genus;
  j["generators"] = gc.presentation.generators;
  ordered_json rels = ordered_json::array();
  for (const auto& r : gc.presentation.relators)
    rels.push_back(serialize_word(r));
  j["relators"] = rels;
  ordered_json mats = ordered_json::array();
  for (const auto& m : gc.matrices) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < m.dim(); ++k) row.push_back(m.entry(i, k));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  for (int a = 0; a < 2; ++a) {
    ordered_json side;
    side["basepoint"] = refinement_json(gc.basepoints[a]);
    side["labels"] = gc.labels[a];
    side["printed_cycles"] = gc.printed_cycles[a];
    ordered_json subs = ordered_json::array();
    for (const auto& w : gc.subgroup_words[a]) subs.push_back(serialize_word(w));
    side["subgroup_words"] = subs;
    j["arf" + std::to_string(a)] = side;
  }
  ordered_json conj = ordered_json::array();
  for (const auto& w : gc.conjugators) conj.push_back(serialize_word(w));
  j["conjugators"] = conj;
  ordered_json classes = ordered_json::array();
  for (const auto& c : gc.classes) {
    ordered_json row;
    row["name"] = c.name;
    if (c.arf)
      row["arf"] = *c.arf;
    else
      row["arf"] = nullptr;
    row["word"] = serialize_word(c.representative);
    if (c.order) row["order"] = c.order->get_str();
    if (c.infinite_order) row["order"] = "infinite";
    if (!c.combination.empty()) {
      ordered_json combo = ordered_json::array();
      for (const auto& [coef, other] : c.combination)
        combo.push_back(ordered_json::array({coef, other}));
      row["combination"] = combo;
    }
    row["source"] = c.source;
    classes.push_back(row);
  }
  j["classes"] = classes;
  ordered_json sources = ordered_json::object();
  for (const auto& [k, v] : gc.sources) sources[k] = v;
  j["sources"] = sources;
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
}

}  // namespace

int run_export(const std::string& out_dir, const std::string& family,
               int genus, const CommonOpts& opts) {
  return guard([&] {
    Timer timer;
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    std::vector<std::pair<Family, int>> wanted;
    if (!family.empty()) {
      wanted.emplace_back(need_family(family), genus);
    } else {
      for (Family f : {Family::MCG, Family::Sp})
        for (int g = 1; g <= 3; ++g) wanted.emplace_back(f, g);
    }

    std::vector<std::string> written;
    for (auto [f, g] : wanted) {
      const GroupCase& gc = get_case(f, g);
      std::string id = case_id(f, g);
      write_file(dir / (id + ".pres"),
                 serialize_presentation(gc.presentation));
      written.push_back((dir / (id + ".pres")).string());
      write_file(dir / (id + ".json"), case_sidecar(gc).dump(2) + "\n");
      written.push_back((dir / (id + ".json")).string());
    }
    if (family.empty()) {
      for (const auto& name : cdga_names()) {
        write_file(dir / (name + ".cdga"), cdga_spec_text(name));
        written.push_back((dir / (name + ".cdga")).string());
      }
    }

    for (const auto& f : written) std::cout << "wrote " << f << "\n";

    ordered_json inputs;
    inputs["out"] = out_dir;
    if (!family.empty()) {
      inputs["family"] = family;
      inputs["genus"] = genus;
    }
    ordered_json results;
    results["files"] = written;
    finish_report(opts, "export", std::move(inputs), std::move(results),
                  timer);
    return 0;
  });
}

}  // namespace quadstab::cli
