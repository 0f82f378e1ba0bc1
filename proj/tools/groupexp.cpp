#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cgt/catalog.hpp"
#include "cgt/constructions.hpp"
#include "cgt/landau.hpp"

namespace {

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants and generator bounds for finite permutation groups"};
  app.require_subcommand(1);

  // ---- check ----
  auto* check = app.add_subcommand("check", "run verification checks on a catalog");
  std::string check_catalog;
  std::uint64_t seed = 0;
  std::string checks_csv = "theorem,lemma,star,star3,sections,gl,proposition";
  cgt::Caps caps;
  std::string format = "json";
  std::string out_path;
  bool allow_skips = false;
  std::size_t section_samples = 20;
  unsigned threads = default_threads();
  check->add_option("catalog", check_catalog, "catalog JSON file")->required();
  check->add_option("--seed", seed, "seed for section sampling");
  check->add_option("--checks", checks_csv,
                    "comma list: theorem,lemma,star,star3,sections,gl,proposition,dmax");
  check->add_option("--enum-cap", caps.enumeration_cap, "max order for enumeration");
  check->add_option("--lattice-cap", caps.lattice_cap, "max order for subgroup lattices");
  check->add_option("--coset-cap", caps.coset_cap, "max index for coset actions");
  check->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  check->add_option("--out", out_path, "write the report here instead of stdout");
  check->add_flag("--allow-skips", allow_skips, "exit 0 even if entries were skipped");
  check->add_option("--sections-samples", section_samples,
                    "section samples per entry (default 20)");
  check->add_option("--threads", threads, "worker threads (default: cores, max 8)");

  // ---- invariants ----
  auto* invariants = app.add_subcommand("invariants", "compute invariants for a catalog");
  std::string inv_catalog;
  std::string inv_format = "json";
  std::string inv_out;
  cgt::Caps inv_caps;
  invariants->add_option("catalog", inv_catalog, "catalog JSON file")->required();
  invariants->add_option("--format", inv_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  invariants->add_option("--out", inv_out, "output path");
  invariants->add_option("--enum-cap", inv_caps.enumeration_cap, "max order for enumeration");

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "emit a built-in family as a catalog");
  std::string family;
  std::vector<std::uint64_t> params;
  std::string construct_name;
  std::string construct_out;
  construct->add_option("family", family,
                        "family name or expression, e.g. psl2 or "
                        "direct_product(symmetric(3),cyclic(2))")
      ->required();
  construct->add_option("params", params, "integer parameters");
  construct->add_option("--name", construct_name, "entry name (default: the spec)");
  construct->add_option("--out", construct_out, "output path");

  // ---- landau ----
  auto* landau = app.add_subcommand("landau", "emit the lcm(1..n) vs g(n) table as CSV");
  std::uint32_t landau_max = 0;
  std::string landau_out;
  landau->add_option("--max", landau_max, "largest n (<= 200)")->required();
  landau->add_option("--out", landau_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      auto entries = cgt::parse_catalog(check_catalog);
      cgt::CheckSelection selection = cgt::CheckSelection::parse(checks_csv);

      auto started = std::chrono::steady_clock::now();
      cgt::RunReport report = cgt::run_suite(entries, selection, seed, caps,
                                             section_samples, threads);
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();

      std::string text = format == "csv" ? cgt::report_to_csv(report)
                                         : cgt::report_to_json(report);
      int rc = write_output(text, out_path);
      if (rc != 0) return rc;

      std::size_t failures = report.failure_count();
      std::size_t skips = report.skip_count();
      std::cerr << "checked " << report.entries.size() << " entries in "
                << elapsed << " ms: " << failures << " failure(s), " << skips
                << " skip(s)\n";
      if (failures > 0) return 1;
      if (skips > 0 && !allow_skips) return 1;
      return 0;
    }

    if (invariants->parsed()) {
      auto entries = cgt::parse_catalog(inv_catalog);
      std::string text = inv_format == "csv"
                             ? cgt::invariants_to_csv(entries, inv_caps)
                             : cgt::invariants_to_json(entries, inv_caps);
      return write_output(text, inv_out);
    }

    if (construct->parsed()) {
      cgt::FamilySpec spec;
      if (family.find('(') != std::string::npos) {
        if (!params.empty())
          throw std::invalid_argument("construct: give either an expression or positional parameters");
        spec = cgt::FamilySpec::parse(family);
      } else {
        spec = cgt::FamilySpec::parse(family);
        spec.params = params;
      }
      cgt::PermGroup G = cgt::build(spec);

      cgt::CatalogEntry entry;
      entry.name = construct_name.empty() ? spec.to_string() : construct_name;
      entry.degree = G.degree();
      for (const cgt::Perm& g : G.generators())
        entry.generators.push_back(cgt::format_cycles(g));
      entry.expect.emplace("order", G.order());
      return write_output(cgt::catalog_to_json({entry}), construct_out);
    }

    if (landau->parsed()) {
      std::ostringstream out;
      out << "n,lcm,g,ratio_num,ratio_den\n";
      for (const cgt::LandauRow& row : cgt::landau_table(landau_max)) {
        out << row.n << ',' << row.lcm_value << ',' << row.g_value << ','
            << row.ratio_num << ',' << row.ratio_den << '\n';
      }
      return write_output(out.str(), landau_out);
    }
  } catch (const cgt::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
