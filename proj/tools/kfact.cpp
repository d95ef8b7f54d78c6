// Command-line front end for the factorization / forest / parking-function
// bijection toolkit.

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kfact/archmap.hpp"
#include "kfact/enumerate.hpp"
#include "kfact/factorization.hpp"
#include "kfact/forest.hpp"
#include "kfact/parking.hpp"
#include "kfact/render.hpp"
#include "kfact/verify.hpp"

namespace {

using namespace kfact;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot open " + path);
  out << content;
}

// Text form of a forest: the parent entries p_1..p_n, and for k > 1 a "/"
// followed by the edge colours with "-" at roots.
std::string forest_to_text(const KForest& f) {
  std::string out;
  for (int v = 1; v <= f.forest.n; ++v) {
    if (v > 1) out += ' ';
    out += std::to_string(f.forest.parent[v]);
  }
  if (f.k != 1) {
    out += " /";
    for (int v = 1; v <= f.forest.n; ++v) {
      out += ' ';
      out += f.colour[v] == kNoColour ? "-" : std::to_string(f.colour[v]);
    }
  }
  return out;
}

KForest forest_from_text(const std::string& text, int k) {
  const auto slash = text.find('/');
  std::istringstream parents_in(text.substr(0, slash));
  std::vector<int> parents;
  int value;
  while (parents_in >> value) parents.push_back(value);
  if (parents.empty()) fail(errc::parse_error, "no parent entries");

  KForest f;
  f.forest = RootedForest::from_parents(parents);
  f.k = k;
  f.colour.assign(parents.size() + 1, kNoColour);
  if (slash != std::string::npos) {
    std::istringstream colours_in(text.substr(slash + 1));
    std::string token;
    int v = 1;
    while (colours_in >> token) {
      if (v > f.forest.n) fail(errc::parse_error, "too many colour entries");
      if (token != "-") f.colour[v] = std::stoi(token);
      ++v;
    }
    if (v != f.forest.n + 1) fail(errc::parse_error, "too few colour entries");
  } else if (k == 1) {
    for (int v = 1; v <= f.forest.n; ++v)
      if (f.forest.parent[v] != 0) f.colour[v] = 0;
  }
  return f;
}

enum class ObjectKind { fact, forest, parking };

// Input format is sniffed: a leading '{' means JSON, anything else is text.
// --format only selects the output form.
bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

ObjectKind parse_kind(const std::string& name) {
  if (name == "fact") return ObjectKind::fact;
  if (name == "forest") return ObjectKind::forest;
  if (name == "parking") return ObjectKind::parking;
  fail(errc::parse_error, "unknown object type " + name);
}

// Every conversion routes through the factorization.
KFactorization read_object(ObjectKind kind, const std::string& text, int k) {
  const bool json = looks_like_json(text);
  switch (kind) {
    case ObjectKind::fact: {
      KFactorization f = json ? nlohmann::json::parse(text).get<KFactorization>()
                              : parse_factorization(text);
      validate(f);
      return f;
    }
    case ObjectKind::forest: {
      KForest f = json ? nlohmann::json::parse(text).get<KForest>()
                       : forest_from_text(text, k);
      validate(f);
      return jcdal_inverse(f);
    }
    case ObjectKind::parking: {
      ParkingFunction p = json ? nlohmann::json::parse(text).get<ParkingFunction>()
                               : parse_parking(text, k);
      validate(p);
      return project_least_inverse(p);
    }
  }
  fail(errc::inconsistency, "unreachable");
}

std::string emit_object(ObjectKind kind, const KFactorization& f,
                        const std::string& format) {
  switch (kind) {
    case ObjectKind::fact:
      return format == "json" ? nlohmann::json(f).dump() + "\n" : to_text(f) + "\n";
    case ObjectKind::forest: {
      const KForest forest = jcdal(f);
      return format == "json" ? nlohmann::json(forest).dump() + "\n"
                              : forest_to_text(forest) + "\n";
    }
    case ObjectKind::parking: {
      const ParkingFunction p = project_least(f);
      return format == "json" ? nlohmann::json(p).dump() + "\n" : to_text(p) + "\n";
    }
  }
  fail(errc::inconsistency, "unreachable");
}

std::string stats_text(ObjectKind kind, const KFactorization& f, int k) {
  std::ostringstream out;
  const std::string suffix = k == 1 ? "" : "_" + std::to_string(k);
  switch (kind) {
    case ObjectKind::fact: {
      const AreaStats a = area_stats(f);
      out << "area" << suffix << "=" << a.area << "\n"
          << "coarea" << suffix << "=" << a.coarea << "\n";
      if (k != 1)
        out << "semiarea" << suffix << "=" << a.semiarea << "\n"
            << "cosemiarea" << suffix << "=" << a.cosemiarea << "\n";
      break;
    }
    case ObjectKind::forest: {
      const ForestStats s = stats(jcdal(f));
      out << "components=" << s.components << "\ndep=" << s.dep << "\nmaj=" << s.maj
          << "\ncomaj=" << s.comaj << "\ninv=" << s.inv << "\ncoinv=" << s.coinv << "\n";
      if (k != 1)
        out << "chr" << suffix << "=" << s.chr << "\ncochr" << suffix << "=" << s.cochr
            << "\nmaj" << suffix << "=" << s.maj_k << "\ncomaj" << suffix << "="
            << s.comaj_k << "\ninv" << suffix << "=" << s.inv_k << "\ncoinv" << suffix
            << "=" << s.coinv_k << "\n";
      break;
    }
    case ObjectKind::parking:
      out << "disp" << suffix << "=" << disp(project_least(f)) << "\n";
      break;
  }
  return out.str();
}

int run_verify(int n, int k, const std::string& suite, int jobs) {
  std::vector<std::pair<int, int>> cells;
  if (n > 0)
    cells.emplace_back(n, k);
  else
    cells = verify::default_grid();

  const auto run_cell = [&suite](std::pair<int, int> cell) {
    std::vector<verify::Report> reports;
    const auto [cn, ck] = cell;
    if (suite == "all")
      reports = verify::check_all(cn, ck);
    else if (suite == "main")
      reports = {verify::check_main_theorem(cn, ck)};
    else if (suite == "dist")
      reports = {verify::check_distributions(cn, ck)};
    else if (suite == "hooks")
      reports = {verify::check_hook_identities(cn, ck)};
    else if (suite == "roundtrip")
      reports = {verify::check_roundtrips(cn, ck)};
    else if (suite == "counts")
      reports = {verify::check_counts(cn, ck)};
    else
      fail(errc::parse_error, "unknown suite " + suite);
    return reports;
  };

  std::vector<std::vector<verify::Report>> all(cells.size());
  if (jobs > 1) {
    std::vector<std::future<std::vector<verify::Report>>> futures;
    futures.reserve(cells.size());
    for (auto cell : cells)
      futures.push_back(std::async(std::launch::async, run_cell, cell));
    for (size_t i = 0; i < cells.size(); ++i) all[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < cells.size(); ++i) all[i] = run_cell(cells[i]);
  }

  bool ok = true;
  for (const auto& reports : all)
    for (const auto& r : reports) {
      std::cout << verify::to_text(r) << "\n";
      ok = ok && r.ok();
    }
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal cycle factorizations, coloured forests and parking functions"};
  app.require_subcommand(1);

  std::string from = "fact", to = "fact", type = "fact", what = "fact";
  std::string in_path, out_path, format = "text", suite = "all";
  std::string render_format = "ascii";
  int k = 1, n = -1, jobs = 1;
  bool with_enumerate = false, with_dual = false;

  auto* convert = app.add_subcommand("convert", "convert between object types");
  convert->add_option("--from", from)->check(CLI::IsMember({"fact", "forest", "parking"}));
  convert->add_option("--to", to)->check(CLI::IsMember({"fact", "forest", "parking"}));
  convert->add_option("--k", k);
  convert->add_option("--in", in_path);
  convert->add_option("--out", out_path);
  convert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* stats_cmd = app.add_subcommand("stats", "print the statistic record of an object");
  stats_cmd->add_option("--type", type)->check(CLI::IsMember({"fact", "forest", "parking"}));
  stats_cmd->add_option("--k", k);
  stats_cmd->add_option("--in", in_path);
  stats_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* count_cmd = app.add_subcommand("count", "print (kn+1)^(n-1)");
  count_cmd->add_option("--n", n)->required();
  count_cmd->add_option("--k", k);
  count_cmd->add_flag("--enumerate", with_enumerate, "also print the enumerated count");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--n", n);
  verify_cmd->add_option("--k", k);
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "main", "dist", "hooks", "roundtrip", "counts"}));
  verify_cmd->add_option("--jobs", jobs);

  auto* enum_cmd = app.add_subcommand("enumerate", "list all objects of one type");
  enum_cmd->add_option("--what", what)->check(CLI::IsMember({"fact", "forest", "parking"}));
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_option("--k", k);

  auto* render_cmd = app.add_subcommand("render", "draw the arch diagram of a factorization");
  render_cmd->add_option("--format", render_format)->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_flag("--dual", with_dual, "include the dual diagram");
  render_cmd->add_option("--in", in_path);
  render_cmd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) {
      const KFactorization f =
          read_object(parse_kind(from), read_input(in_path), k);
      if (f.k != k && (from != "fact" || convert->count("--k") > 0))
        fail(errc::size_mismatch, "object has k=" + std::to_string(f.k));
      write_output(out_path, emit_object(parse_kind(to), f, format));
    } else if (stats_cmd->parsed()) {
      const KFactorization f =
          read_object(parse_kind(type), read_input(in_path), k);
      write_output(out_path, stats_text(parse_kind(type), f, f.k));
    } else if (count_cmd->parsed()) {
      std::cout << enumerate::expected_count(n, k) << "\n";
      if (with_enumerate)
        std::cout << "enumerated=" << enumerate::k_factorizations(n, k).size() << "\n";
    } else if (verify_cmd->parsed()) {
      return run_verify(n, k, suite, jobs);
    } else if (enum_cmd->parsed()) {
      std::ostringstream out;
      switch (parse_kind(what)) {
        case ObjectKind::fact:
          for (const auto& f : enumerate::k_factorizations(n, k)) out << to_text(f) << "\n";
          break;
        case ObjectKind::forest:
          for (const auto& f : enumerate::k_forests(n, k)) out << forest_to_text(f) << "\n";
          break;
        case ObjectKind::parking:
          for (const auto& p : enumerate::k_parking_functions(n, k))
            out << to_text(p) << "\n";
          break;
      }
      write_output(out_path, out.str());
    } else if (render_cmd->parsed()) {
      KFactorization f = parse_factorization(read_input(in_path));
      validate(f);
      if (f.k != 1) f = lower(f);
      const DualLayout layout = dual_layout(f);
      const RootedForest cover = cda(f);
      write_output(out_path, render_format == "svg"
                                 ? render_svg(layout, cover, with_dual)
                                 : render_ascii(layout, with_dual));
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == errc::parse_error ? kExitParse : kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
