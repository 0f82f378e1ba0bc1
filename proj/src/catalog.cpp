#include "cgt/catalog.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cgt/group_ops.hpp"

namespace cgt {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

BigUint expect_value(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_unsigned()) return BigUint{v.get<std::uint64_t>()};
  if (v.is_string()) return BigUint::from_string(v.get<std::string>());
  throw std::invalid_argument(where + ": expected a nonnegative integer or a decimal string");
}

}  // namespace

std::vector<CatalogEntry> parse_catalog_text(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("catalog: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array())
    throw std::invalid_argument("catalog: top level must be {\"groups\": [...]}");

  std::vector<CatalogEntry> entries;
  std::map<std::string, std::size_t> names;
  std::size_t at = 0;
  for (const auto& g : doc["groups"]) {
    std::string where = "catalog: groups[" + std::to_string(at) + "]";
    if (!g.is_object()) throw std::invalid_argument(where + ": expected an object");

    CatalogEntry entry;
    if (!g.contains("name") || !g["name"].is_string())
      throw std::invalid_argument(where + ": missing string field \"name\"");
    entry.name = g["name"].get<std::string>();
    where += " (\"" + entry.name + "\")";
    if (!names.emplace(entry.name, at).second)
      throw std::invalid_argument(where + ": duplicate name");

    if (!g.contains("degree") || !g["degree"].is_number_unsigned() ||
        g["degree"].get<std::uint64_t>() == 0)
      throw std::invalid_argument(where + ": \"degree\" must be a positive integer");
    std::uint64_t deg = g["degree"].get<std::uint64_t>();
    if (deg > 20000)
      throw std::invalid_argument(where + ": degree too large (limit 20000)");
    entry.degree = static_cast<Perm::point>(deg);

    if (!g.contains("generators") || !g["generators"].is_array())
      throw std::invalid_argument(where + ": missing array field \"generators\"");
    std::size_t gi = 0;
    for (const auto& s : g["generators"]) {
      if (!s.is_string())
        throw std::invalid_argument(where + ": generators[" + std::to_string(gi) +
                                    "] must be a string");
      std::string text = s.get<std::string>();
      try {
        parse_cycles(text, entry.degree);
      } catch (const parse_error& e) {
        throw std::invalid_argument(where + ": generators[" + std::to_string(gi) +
                                    "] = \"" + text + "\": " + e.what() +
                                    " (position " + std::to_string(e.position()) + ")");
      }
      entry.generators.push_back(std::move(text));
      ++gi;
    }

    if (g.contains("expect")) {
      if (!g["expect"].is_object())
        throw std::invalid_argument(where + ": \"expect\" must be an object");
      for (const auto& [key, value] : g["expect"].items()) {
        if (key != "order" && key != "exponent" && key != "E" && key != "d")
          throw std::invalid_argument(where + ": unknown expect key \"" + key + "\"");
        entry.expect.emplace(key, expect_value(value, where + ".expect." + key));
      }
    }
    entries.push_back(std::move(entry));
    ++at;
  }
  return entries;
}

std::vector<CatalogEntry> parse_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("catalog: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog_text(buf.str());
}

PermGroup realize(const CatalogEntry& entry) {
  std::vector<Perm> gens;
  gens.reserve(entry.generators.size());
  for (const std::string& s : entry.generators)
    gens.push_back(parse_cycles(s, entry.degree));
  return PermGroup(entry.degree, std::move(gens));
}

std::string catalog_to_json(const std::vector<CatalogEntry>& entries) {
  ordered_json doc;
  doc["groups"] = ordered_json::array();
  for (const CatalogEntry& e : entries) {
    ordered_json g;
    g["name"] = e.name;
    g["degree"] = e.degree;
    g["generators"] = e.generators;
    if (!e.expect.empty()) {
      ordered_json ex;
      for (const auto& [key, value] : e.expect) {
        if (value.fits_u64())
          ex[key] = value.to_u64();
        else
          ex[key] = value.to_string();
      }
      g["expect"] = std::move(ex);
    }
    doc["groups"].push_back(std::move(g));
  }
  return doc.dump(2) + "\n";
}

CheckSelection CheckSelection::parse(const std::string& csv) {
  CheckSelection sel;
  sel.theorem = sel.lemma = sel.star = sel.star3 = false;
  sel.sections = sel.gl = sel.proposition = sel.dmax = false;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "theorem") sel.theorem = true;
    else if (token == "lemma") sel.lemma = true;
    else if (token == "star") sel.star = true;
    else if (token == "star3") sel.star3 = true;
    else if (token == "sections") sel.sections = true;
    else if (token == "gl") sel.gl = true;
    else if (token == "proposition") sel.proposition = true;
    else if (token == "dmax") sel.dmax = true;
    else if (token == "all") sel = CheckSelection{}, sel.dmax = true;
    else if (!token.empty())
      throw std::invalid_argument("unknown check \"" + token + "\"");
  }
  return sel;
}

std::size_t RunReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.failures.size();
  return n;
}

std::size_t RunReport::skip_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.skips.size();
  return n;
}

namespace {

void check_expectations(const CatalogEntry& entry, const GroupInvariants& inv,
                        EntryReport& report) {
  for (const auto& [key, expected] : entry.expect) {
    BigUint actual;
    if (key == "order") actual = inv.order;
    else if (key == "exponent") actual = BigUint{inv.exponent};
    else if (key == "E") actual = inv.ratio_E;
    else actual = BigUint{inv.d};
    if (actual != expected) {
      report.failures.push_back("expect: " + key + " = " + expected.to_string() +
                                " but computed " + actual.to_string());
    }
  }
}

EntryReport process_entry(const CatalogEntry& entry, const CheckSelection& sel,
                          std::uint64_t entry_seed, const Caps& caps,
                          std::size_t section_samples) {
  EntryReport report;
  report.name = entry.name;

  PermGroup G = realize(entry);
  GroupContext ctx{PermGroup::trivial(1), {}, {}};
  try {
    ctx = GroupContext::analyze(G, caps.enumeration_cap);
  } catch (const cap_exceeded& e) {
    report.skips.push_back(std::string("analysis: ") + e.what());
    return report;
  }
  report.analyzed = true;
  report.inv = ctx.inv;
  check_expectations(entry, ctx.inv, report);

  bool nontrivial = !ctx.inv.order.is_one();

  if (sel.theorem) {
    TheoremVerdict v = check_theorem(ctx);
    if (v.applicable) {
      if (!v.holds)
        report.failures.push_back("theorem: p^d = " + v.lhs_scaled.to_string() +
                                  " exceeds E*p^2 = " + v.rhs_scaled.to_string());
      if (!v.consistent)
        report.failures.push_back(
            "theorem: equality characterization mismatch: p^d = " +
            v.lhs_scaled.to_string() + ", E*p^2 = " + v.rhs_scaled.to_string() +
            ", predicted_equality = " + (v.predicted_equality ? "true" : "false"));
    }
    report.verdict = std::move(v);
  }

  if (sel.lemma && ctx.inv.flags.nilpotent) {
    bool ok = check_lemma(ctx, caps.enumeration_cap);
    if (!ok) report.failures.push_back("lemma: nilpotent bound p^(d-1) <= E failed");
    report.lemma = ok;
  }

  if (sel.star) {
    bool ok = check_multiplicativity(ctx, caps.enumeration_cap);
    if (!ok) report.failures.push_back("star: E(G) != product of E(P) over Sylow subgroups");
    report.star = ok;
  }

  if (sel.star3 && nontrivial) {
    bool ok = check_star3(ctx);
    if (!ok) report.failures.push_back("star3: p^2 * prod p_i^(d_i - 1) < p^d");
    report.star3 = ok;
  }

  if (sel.gl && nontrivial) {
    bool ok = check_gl_bound(ctx);
    if (!ok) report.failures.push_back("gl: d(G) > 1 + max d(P)");
    report.gl = ok;
  }

  if (sel.proposition) {
    bool ok = check_proposition(ctx, caps.enumeration_cap);
    if (!ok) report.failures.push_back("proposition: odd E without solvability/parity witness");
    report.proposition = ok;
  }

  if (sel.sections) {
    SectionSampleReport s = check_section_divisibility(
        ctx, section_samples, entry_seed, caps.enumeration_cap, caps.coset_cap);
    for (const auto& sample : s.samples) {
      if (!sample.divides) {
        report.failures.push_back(
            "sections: E(H/N) = " + sample.quotient_E.to_string() +
            " does not divide E(G) = " + ctx.inv.ratio_E.to_string() +
            " (|H| = " + sample.subgroup_order.to_string() +
            ", |N| = " + sample.normal_order.to_string() + ")");
      }
    }
    for (const std::string& skip : s.skipped)
      report.skips.push_back("sections: " + skip);
    report.sections = std::move(s);
  }

  if (sel.dmax) {
    try {
      report.dmax = is_d_maximal(ctx, caps.enumeration_cap, caps.lattice_cap);
    } catch (const cap_exceeded& e) {
      report.skips.push_back(std::string("dmax: ") + e.what());
    }
  }

  return report;
}

}  // namespace

RunReport run_suite(const std::vector<CatalogEntry>& entries,
                    const CheckSelection& selection, std::uint64_t seed,
                    const Caps& caps, std::size_t section_samples,
                    unsigned threads) {
  RunReport report;
  report.seed = seed;
  report.caps = caps;
  report.checks = selection;
  report.section_samples = section_samples;
  report.entries.resize(entries.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) break;
      std::uint64_t entry_seed = seed ^ fnv1a64(entries[i].name);
      try {
        report.entries[i] = process_entry(entries[i], selection, entry_seed,
                                          caps, section_samples);
      } catch (const std::exception& e) {
        report.entries[i].name = entries[i].name;
        report.entries[i].failures.push_back(std::string("internal error: ") +
                                             e.what());
      }
    }
  };

  unsigned n_threads = std::max(1u, threads);
  if (n_threads == 1 || entries.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

namespace {

ordered_json flags_to_json(const StructuralFlags& f) {
  ordered_json j;
  j["cyclic"] = f.cyclic;
  j["abelian"] = f.abelian;
  j["nilpotent"] = f.nilpotent;
  j["solvable"] = f.solvable;
  j["all_sylow_cyclic"] = f.all_sylow_cyclic;
  return j;
}

ordered_json invariants_to_json_obj(const GroupInvariants& inv) {
  ordered_json j;
  j["order"] = inv.order.to_string();
  j["exponent"] = std::to_string(inv.exponent);
  j["E"] = inv.ratio_E.to_string();
  j["d"] = inv.d;
  if (inv.smallest_prime)
    j["smallest_prime"] = *inv.smallest_prime;
  else
    j["smallest_prime"] = nullptr;
  j["max_element_order"] = std::to_string(inv.max_element_order);
  j["exponent_method"] = inv.exponent_method;
  j["flags"] = flags_to_json(inv.flags);
  j["sylow"] = ordered_json::array();
  for (const SylowData& s : inv.sylow) {
    ordered_json sj;
    sj["p"] = s.prime;
    sj["order_exponent"] = s.prime_exponent;
    sj["exponent"] = std::to_string(s.subgroup_exponent);
    sj["d"] = s.d;
    j["sylow"].push_back(std::move(sj));
  }
  return j;
}

ordered_json opt_bool(const std::optional<bool>& v) {
  if (v) return *v;
  return nullptr;
}

std::vector<std::string> selected_names(const CheckSelection& c) {
  std::vector<std::string> out;
  if (c.theorem) out.push_back("theorem");
  if (c.lemma) out.push_back("lemma");
  if (c.star) out.push_back("star");
  if (c.star3) out.push_back("star3");
  if (c.sections) out.push_back("sections");
  if (c.gl) out.push_back("gl");
  if (c.proposition) out.push_back("proposition");
  if (c.dmax) out.push_back("dmax");
  return out;
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  ordered_json doc;
  doc["meta"]["seed"] = report.seed;
  doc["meta"]["caps"]["enumeration_cap"] = report.caps.enumeration_cap;
  doc["meta"]["caps"]["coset_cap"] = report.caps.coset_cap;
  doc["meta"]["caps"]["lattice_cap"] = report.caps.lattice_cap;
  doc["meta"]["checks"] = selected_names(report.checks);
  doc["meta"]["section_samples"] = report.section_samples;

  doc["entries"] = ordered_json::array();
  for (const EntryReport& e : report.entries) {
    ordered_json j;
    j["name"] = e.name;
    j["analyzed"] = e.analyzed;
    if (e.inv) j["invariants"] = invariants_to_json_obj(*e.inv);
    if (e.verdict) {
      const TheoremVerdict& v = *e.verdict;
      ordered_json t;
      t["applicable"] = v.applicable;
      if (v.applicable) {
        t["holds"] = v.holds;
        t["equality"] = v.equality;
        t["lhs_scaled"] = v.lhs_scaled.to_string();
        t["rhs_scaled"] = v.rhs_scaled.to_string();
        t["predicted_equality"] = v.predicted_equality;
        t["consistent"] = v.consistent;
      }
      j["theorem"] = std::move(t);
    }
    j["lemma"] = opt_bool(e.lemma);
    j["star"] = opt_bool(e.star);
    j["star3"] = opt_bool(e.star3);
    j["gl"] = opt_bool(e.gl);
    j["proposition"] = opt_bool(e.proposition);
    j["dmax"] = opt_bool(e.dmax);
    if (e.sections) {
      ordered_json s;
      s["seed"] = e.sections->seed;
      s["samples"] = ordered_json::array();
      for (const SectionSample& sample : e.sections->samples) {
        ordered_json sj;
        sj["subgroup_order"] = sample.subgroup_order.to_string();
        sj["normal_order"] = sample.normal_order.to_string();
        sj["quotient_E"] = sample.quotient_E.to_string();
        sj["divides"] = sample.divides;
        s["samples"].push_back(std::move(sj));
      }
      s["skipped"] = e.sections->skipped;
      j["sections"] = std::move(s);
    }
    j["failures"] = e.failures;
    j["skips"] = e.skips;
    doc["entries"].push_back(std::move(j));
  }

  doc["summary"]["entries"] = report.entries.size();
  doc["summary"]["failures"] = report.failure_count();
  doc["summary"]["skips"] = report.skip_count();
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_bool(const std::optional<bool>& v) {
  if (!v) return "na";
  return *v ? "true" : "false";
}

}  // namespace

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "name,order,exponent,E,d,p,lhs_scaled,rhs_scaled,equality,"
         "theorem,lemma,star,star3,sections,gl,proposition,dmax\n";
  for (const EntryReport& e : report.entries) {
    out << e.name << ',';
    if (e.inv) {
      out << e.inv->order.to_string() << ',' << e.inv->exponent << ','
          << e.inv->ratio_E.to_string() << ',' << e.inv->d << ',';
      if (e.inv->smallest_prime) out << *e.inv->smallest_prime;
      out << ',';
    } else {
      out << ",,,,,";
    }
    if (e.verdict && e.verdict->applicable) {
      out << e.verdict->lhs_scaled.to_string() << ','
          << e.verdict->rhs_scaled.to_string() << ','
          << (e.verdict->equality ? "true" : "false") << ','
          << (e.verdict->holds && e.verdict->consistent ? "true" : "false") << ',';
    } else {
      out << ",,na,na,";
    }
    out << csv_bool(e.lemma) << ',' << csv_bool(e.star) << ','
        << csv_bool(e.star3) << ',';
    if (e.sections)
      out << (e.sections->all_divide() ? "true" : "false") << ',';
    else
      out << "na,";
    out << csv_bool(e.gl) << ',' << csv_bool(e.proposition) << ','
        << csv_bool(e.dmax) << '\n';
  }
  return out.str();
}

std::string invariants_to_json(const std::vector<CatalogEntry>& entries,
                               const Caps& caps) {
  ordered_json doc;
  doc["entries"] = ordered_json::array();
  for (const CatalogEntry& entry : entries) {
    ordered_json j;
    j["name"] = entry.name;
    j["degree"] = entry.degree;
    try {
      GroupInvariants inv = invariants_report(realize(entry), caps.enumeration_cap);
      j["invariants"] = invariants_to_json_obj(inv);
    } catch (const cap_exceeded& e) {
      j["skipped"] = e.what();
    }
    doc["entries"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string invariants_to_csv(const std::vector<CatalogEntry>& entries,
                              const Caps& caps) {
  std::ostringstream out;
  out << "name,degree,order,exponent,E,d,p,max_element_order,"
         "cyclic,abelian,nilpotent,solvable,all_sylow_cyclic\n";
  for (const CatalogEntry& entry : entries) {
    out << entry.name << ',' << entry.degree << ',';
    try {
      GroupInvariants inv = invariants_report(realize(entry), caps.enumeration_cap);
      out << inv.order.to_string() << ',' << inv.exponent << ','
          << inv.ratio_E.to_string() << ',' << inv.d << ',';
      if (inv.smallest_prime) out << *inv.smallest_prime;
      out << ',' << inv.max_element_order << ','
          << (inv.flags.cyclic ? "true" : "false") << ','
          << (inv.flags.abelian ? "true" : "false") << ','
          << (inv.flags.nilpotent ? "true" : "false") << ','
          << (inv.flags.solvable ? "true" : "false") << ','
          << (inv.flags.all_sylow_cyclic ? "true" : "false") << '\n';
    } catch (const cap_exceeded&) {
      out << ",,,,,,,,,,skipped\n";
    }
  }
  return out.str();
}

}  // namespace cgt
