// pi0 — component groups of real reductive groups at the command line.
//
//   pi0 compute <spec>      pi0 of a catalog entry or JSON document
//   pi0 torus ...           pi0 of a real torus from its Galois action
//   pi0 table ...           pi0 over a deterministic family of forms
//   pi0 validate <spec>     check a specification without computing
//   pi0 catalog             list the named forms
//
// Exit codes: 0 success, 1 internal inconsistency, 2 invalid input.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcg/json_io.hpp"
#include "rcg/pi0_engine.hpp"

namespace {

using namespace rcg;

std::pair<RootDatum, RealFormSpec> load_spec(const std::string& spec) {
  const bool looks_like_file = spec.size() > 5 &&
                               spec.substr(spec.size() - 5) == ".json";
  if (looks_like_file || std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open '" + spec + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("invalid JSON in '" + spec + "': " + e.what());
    }
    auto [d, f] = document_from_json(j);
    if (!f) throw ParseError("document '" + spec + "' has no 'gamma'");
    return {std::move(d), std::move(*f)};
  }
  return parse_catalog_spec(spec);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw ParseError("cannot write '" + output_path + "'");
  out << text;
}

std::string render_pi0_text(const Pi0Result& r) {
  std::ostringstream os;
  os << r.group.to_text() << "\n";
  for (Index j = 0; j < r.witnesses.cols(); ++j)
    os << "witness: " << format_vector(r.witnesses.col(j)) << "\n";
  return os.str();
}

int cmd_compute(const std::string& spec, const std::string& format,
                const std::string& output) {
  auto [d, f] = load_spec(spec);
  Pi0Result r = pi0(d, f);
  if (format == "json") {
    emit(pi0_to_json(d, f, r).dump(2) + "\n", output);
  } else {
    emit(render_pi0_text(r), output);
  }
  return 0;
}

int cmd_torus(long split, long compact, long cx, const std::string& gamma_json,
              const std::string& format, const std::string& output) {
  IntMatrix gamma;
  if (!gamma_json.empty()) {
    std::ifstream in(gamma_json);
    if (!in) throw ParseError("cannot open '" + gamma_json + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("invalid JSON in '" + gamma_json + "': " + e.what());
    }
    const nlohmann::json& m = j.is_object() && j.contains("gamma") ? j.at("gamma") : j;
    if (!m.is_array()) throw ParseError("'gamma' must be a matrix of rows");
    const Index n = static_cast<Index>(m.size());
    gamma.resize(n, n);
    for (Index i = 0; i < n; ++i) {
      if (!m[i].is_array() || static_cast<Index>(m[i].size()) != n)
        throw ParseError("'gamma' must be square");
      for (Index k = 0; k < n; ++k) {
        if (!m[i][k].is_number_integer())
          throw ParseError("'gamma' entries must be integers");
        gamma(i, k) = Int(static_cast<long>(m[i][k].get<long long>()));
      }
    }
  } else {
    if (split < 0 || compact < 0 || cx < 0)
      throw ParseError("block sizes must be nonnegative");
    const Index n = split + compact + 2 * cx;
    gamma = IntMatrix::Zero(n, n);
    Index at = 0;
    for (long i = 0; i < split; ++i, ++at) gamma(at, at) = 1;
    for (long i = 0; i < compact; ++i, ++at) gamma(at, at) = -1;
    for (long i = 0; i < cx; ++i, at += 2) {
      gamma(at, at + 1) = 1;
      gamma(at + 1, at) = 1;
    }
  }
  GammaLattice L{std::move(gamma)};
  Pi0Result r = pi0_torus(L);
  if (format == "json") {
    nlohmann::json j;
    j["group"] = to_json(r.group);
    j["witnesses"] = columns_to_json(r.witnesses);
    j["gamma"] = to_json(L.gamma);
    emit(j.dump(2) + "\n", output);
  } else {
    emit(render_pi0_text(r), output);
  }
  return 0;
}

std::vector<std::string> table_specs(long max_rank, const std::string& forms) {
  std::vector<std::string> specs;
  auto simple_family = [&](const std::string& family) {
    struct TypeRange {
      const char* letter;
      long lo, hi;
      bool fused;
    };
    const TypeRange ranges[] = {
        {"A", 1, max_rank, false}, {"B", 2, max_rank, false},
        {"C", 2, max_rank, false}, {"D", 4, max_rank, false},
        {"E", 6, std::min<long>(8, max_rank), true},
        {"F", 4, std::min<long>(4, max_rank), true},
        {"G", 2, std::min<long>(2, max_rank), true},
    };
    for (const auto& tr : ranges)
      for (long r = tr.lo; r <= tr.hi; ++r)
        for (const char* iso : {"sc", "adjoint"}) {
          std::ostringstream os;
          os << family << "/" << tr.letter;
          if (!tr.fused) os << "/";
          os << r << "/" << iso;
          specs.push_back(os.str());
        }
  };
  const bool all = forms == "all-catalog";
  if (forms == "split" || all) simple_family("split");
  if (forms == "compact" || all) simple_family("compact");
  if (all) {
    for (long n = 1; n <= max_rank; ++n)
      specs.push_back("gl/" + std::to_string(n));
    for (long n = 1; n <= max_rank; ++n)
      for (long q = 0; q <= n / 2; ++q)
        specs.push_back("u/" + std::to_string(n - q) + "/" + std::to_string(q));
    for (long n = 2; n <= max_rank; ++n)
      for (long q = 0; q <= n / 2; ++q)
        specs.push_back("su/" + std::to_string(n - q) + "/" + std::to_string(q));
    for (long n = 2; n <= 2 * max_rank + 1; ++n)
      for (long q = 0; q <= n / 2; ++q)
        specs.push_back("so/" + std::to_string(n - q) + "/" + std::to_string(q));
    for (long n = 1; n <= max_rank; ++n)
      specs.push_back("sp2n_r/" + std::to_string(n));
    for (long n = 1; n <= max_rank; ++n)
      specs.push_back("torus/" + std::to_string(n));
  }
  if (specs.empty())
    throw ParseError("--forms must be split, compact or all-catalog");
  return specs;
}

int cmd_table(long max_rank, const std::string& forms,
              const std::string& format, const std::string& output) {
  if (max_rank < 1 || max_rank > 8)
    throw ParseError("--max-rank must be between 1 and 8");
  struct Row {
    std::string spec, group;
    Index real_rank;
  };
  std::vector<Row> rows;
  for (const std::string& spec : table_specs(max_rank, forms)) {
    auto [d, f] = parse_catalog_spec(spec);
    Pi0Result r = pi0(d, f);
    rows.push_back({spec, r.group.to_text(), real_rank(d, f)});
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "spec,pi0,real_rank\n";
    for (const Row& row : rows)
      os << row.spec << "," << row.group << "," << row.real_rank << "\n";
  } else {
    size_t w0 = 4, w1 = 3;
    for (const Row& row : rows) {
      w0 = std::max(w0, row.spec.size());
      w1 = std::max(w1, row.group.size());
    }
    os << std::left << std::setw(static_cast<int>(w0) + 2) << "spec"
       << std::setw(static_cast<int>(w1) + 2) << "pi0" << "real_rank\n";
    for (const Row& row : rows)
      os << std::left << std::setw(static_cast<int>(w0) + 2) << row.spec
         << std::setw(static_cast<int>(w1) + 2) << row.group << row.real_rank
         << "\n";
  }
  emit(os.str(), output);
  return 0;
}

int cmd_validate(const std::string& spec) {
  const bool looks_like_file = (spec.size() > 5 &&
                                spec.substr(spec.size() - 5) == ".json") ||
                               std::filesystem::exists(spec);
  if (looks_like_file) {
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open '" + spec + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("invalid JSON in '" + spec + "': " + e.what());
    }
    auto [d, f] = document_from_json(j);  // validates both parts
    std::cout << "ok: rank " << d.rank << ", " << d.num_roots() << " roots"
              << (f ? ", with involution" : ", datum only") << "\n";
    return 0;
  }
  auto [d, f] = parse_catalog_spec(spec);
  validate_form(d, f);
  std::cout << "ok: " << (f.name.empty() ? spec : f.name) << "\n";
  return 0;
}

int cmd_catalog(const std::string& format, const std::string& output) {
  auto entries = catalog_entries();
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries)
      j.push_back({{"name", e.name}, {"grammar", e.grammar}, {"summary", e.summary}});
    emit(j.dump(2) + "\n", output);
    return 0;
  }
  size_t w0 = 4, w1 = 7;
  for (const auto& e : entries) {
    w0 = std::max(w0, e.name.size());
    w1 = std::max(w1, e.grammar.size());
  }
  std::ostringstream os;
  for (const auto& e : entries)
    os << std::left << std::setw(static_cast<int>(w0) + 2) << e.name
       << std::setw(static_cast<int>(w1) + 2) << e.grammar << e.summary << "\n";
  emit(os.str(), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"component groups of real reductive groups"};
  app.require_subcommand(1);

  std::string spec, format = "text", output, forms = "split", gamma_json;
  long max_rank = 8, split_blocks = 0, compact_blocks = 0, cx_blocks = 0;

  CLI::App* compute = app.add_subcommand("compute", "pi0 of a reductive group");
  compute->add_option("spec", spec, "catalog spec or JSON file")->required();
  compute->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--output", output, "write to file instead of stdout");

  CLI::App* torus_cmd = app.add_subcommand("torus", "pi0 of a real torus");
  torus_cmd->add_option("--split", split_blocks, "number of split factors");
  torus_cmd->add_option("--compact", compact_blocks, "number of compact factors");
  torus_cmd->add_option("--cx", cx_blocks, "number of C^x factors (rank 2 each)");
  torus_cmd->add_option("--gamma-json", gamma_json,
                        "JSON file with the Galois matrix");
  torus_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  torus_cmd->add_option("--output", output, "write to file instead of stdout");

  CLI::App* table = app.add_subcommand("table", "pi0 across families of forms");
  table->add_option("--max-rank", max_rank, "largest simple rank (<= 8)");
  table->add_option("--forms", forms, "split, compact or all-catalog")
      ->check(CLI::IsMember({"split", "compact", "all-catalog"}));
  table->add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  table->add_option("--output", output, "write to file instead of stdout");

  CLI::App* validate_cmd = app.add_subcommand("validate", "validate a spec");
  validate_cmd->add_option("spec", spec, "catalog spec or JSON file")->required();

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list named forms");
  catalog_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  catalog_cmd->add_option("--output", output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(spec, format, output);
    if (torus_cmd->parsed())
      return cmd_torus(split_blocks, compact_blocks, cx_blocks, gamma_json,
                       format, output);
    if (table->parsed()) return cmd_table(max_rank, forms, format, output);
    if (validate_cmd->parsed()) return cmd_validate(spec);
    if (catalog_cmd->parsed()) return cmd_catalog(format, output);
  } catch (const rcg::InternalInconsistency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rcg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
