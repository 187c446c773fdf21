#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loopnet/builders.hpp"
#include "loopnet/catalog.hpp"
#include "loopnet/engine.hpp"
#include "loopnet/gate.hpp"
#include "loopnet/io.hpp"
#include "loopnet/search.hpp"

namespace fs = std::filesystem;
using namespace loopnet;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  std::string field;
  std::string out;
  std::uint64_t budget = 100'000'000;
  int workers = 1;
  std::string checkpoint;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LoopTable read_loop(const std::string& path) {
  std::istringstream in(read_text(path));
  return parse_loop(in);
}

AnyNet read_net(const std::string& path) {
  std::istringstream in(read_text(path));
  return parse_net(in);
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return static_cast<int>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer, got '" + s + "'");
}

std::uint32_t resolve_prime(const Globals& g, std::optional<std::string> positional) {
  if (!g.field.empty()) {
    if (positional && *positional != g.field) throw UsageError("--field disagrees with the prime argument");
    positional = g.field;
  }
  if (!positional) throw UsageError("a prime is required");
  const int p = to_int(*positional);
  if (p < 2 || !is_prime(p)) throw UsageError("not a prime: " + *positional);
  return static_cast<std::uint32_t>(p);
}

std::string structure_summary(const StructureReport& r) {
  std::string s;
  if (r.is_group) {
    s = "group";
  } else {
    s = r.is_steiner ? "steiner" : r.is_moufang ? "moufang" : r.is_diassociative ? "diassociative" : "loop";
    s += " nongroup";
  }
  if (r.is_commutative) s += " commutative";
  return s;
}

std::string spectrum_text(const std::map<int, int>& spectrum) {
  std::string s;
  for (const auto& [ord, cnt] : spectrum) s += (s.empty() ? "" : " ") + std::to_string(ord) + ":" + std::to_string(cnt);
  return s;
}

int cmd_catalog(const Globals& g, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("catalog needs a name");
  const std::string& name = args[0];
  auto arg = [&](std::size_t i) {
    if (i >= args.size()) throw UsageError("catalog " + name + ": missing parameter");
    return to_int(args[i]);
  };
  auto expect = [&](std::size_t count) {
    if (args.size() != count) throw UsageError("catalog " + name + ": wrong number of parameters");
  };
  LoopTable loop;
  try {
    if (name == "cyclic") {
      expect(2);
      loop = cyclic(arg(1));
    } else if (name == "product") {
      expect(3);
      loop = product(arg(1), arg(2));
    } else if (name == "dihedral") {
      expect(2);
      loop = dihedral(arg(1));
    } else if (name == "elementary") {
      expect(3);
      loop = elementary_abelian(arg(1), arg(2));
    } else if (name == "quaternion8") {
      expect(1);
      loop = quaternion8();
    } else if (name == "alt4") {
      expect(1);
      loop = alt4();
    } else if (name == "sym4") {
      expect(1);
      loop = sym4();
    } else if (name == "alt5") {
      expect(1);
      loop = alt5();
    } else if (name == "octonion16") {
      expect(1);
      loop = octonion16();
    } else if (name == "chein") {
      expect(2);
      loop = chein_double(read_loop(args[1]));
    } else if (name == "steiner") {
      expect(2);
      if (args[1] == "ag23") {
        loop = steiner_from_sts(ag23_sts());
      } else {
        std::istringstream in(read_text(args[1]));
        loop = steiner_from_sts(parse_sts(in));
      }
    } else if (name == "extension") {
      expect(1);
      const auto r = central_extension_search(steiner_from_sts(ag23_sts()), static_cast<std::int64_t>(g.budget));
      if (r.status == SearchStatus::budget_exceeded) {
        std::cout << "catalog: budget\nnodes: " << r.nodes << '\n';
        return kBudget;
      }
      if (r.status == SearchStatus::exhausted) {
        std::cout << "catalog: exhausted\nnote: symmetry-reduced space exhausted without a match\n";
        return kNegative;
      }
      loop = *r.loop;
    } else {
      throw UsageError("unknown catalog name '" + name + "'");
    }
  } catch (const Error& e) {
    if (e.code() == Errc::BadParameter) throw UsageError(e.what());
    throw;
  }
  loop.set_name(identify(loop));
  const std::string path = g.out.empty() ? name + ".loop" : g.out;
  write_text(path, format_loop(loop));
  const auto r = structure_probe(loop);
  std::cout << "catalog: ok\n"
            << "name: " << loop.name() << '\n'
            << "order: " << loop.order() << '\n'
            << "structure: " << structure_summary(r) << '\n'
            << "file: " << path << '\n';
  return kOk;
}

int cmd_probe(const std::string& file) {
  const auto loop = read_loop(file);
  const auto r = structure_probe(loop);
  std::cout << "probe: ok\n"
            << "name: " << identify(loop) << '\n'
            << "order: " << loop.order() << '\n'
            << "structure: " << structure_summary(r) << '\n'
            << "exponent: " << r.exponent << '\n'
            << "max order: " << r.max_order << '\n'
            << "spectrum: " << spectrum_text(r.order_spectrum) << '\n'
            << "involutions: " << r.involution_count << '\n';
  if (r.orders_left_normed) std::cout << "note: not diassociative; orders use left-normed powers\n";
  return kOk;
}

int cmd_gate(const std::string& file) {
  const auto loop = read_loop(file);
  const auto report = gate_full(loop);
  std::cout << "gate: " << verdict_name(report.verdict) << ", rule " << rule_name(report.rule);
  if (!report.case_tag.empty()) std::cout << " case " << report.case_tag;
  std::cout << '\n' << render(report);
  if (report.verdict == Verdict::inconclusive) std::cout << "note: no applicable theorem decides this loop\n";
  return report.verdict == Verdict::excluded ? kNegative : kOk;
}

int cmd_build(const Globals& g, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("build needs a family");
  const std::string& family = args[0];
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) throw UsageError("build " + family + ": wrong number of parameters");
  };
  auto opt = [&](std::size_t i) -> std::optional<std::int64_t> {
    if (i < args.size()) return to_int(args[i]);
    return std::nullopt;
  };
  BuiltNet b;
  if (family == "triangular") {
    need(3, 5);
    b = triangular(to_int(args[1]), resolve_prime(g, args[2]), opt(3).value_or(1), opt(4).value_or(1));
  } else if (family == "conic-line" || family == "conic_line") {
    need(3, 5);
    b = conic_line(to_int(args[1]), resolve_prime(g, args[2]), opt(3).value_or(1), opt(4));
  } else if (family == "tetrahedron") {
    need(3, 4);
    b = tetrahedron(to_int(args[1]), resolve_prime(g, args[2]), opt(3));
  } else if (family == "pencil") {
    need(1, 3);
    const auto p = resolve_prime(g, args.size() > 1 ? std::optional(args[1]) : std::nullopt);
    const auto n = opt(2);
    b = pencil(p, n ? std::optional<int>(static_cast<int>(*n)) : std::nullopt);
  } else if (family == "elliptic") {
    need(4, 4);
    b = elliptic_auto(WeierstrassCurve(to_int(args[1]), to_int(args[2]), resolve_prime(g, args[3])));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  const std::string path = g.out.empty() ? "out.net" : g.out;
  write_text(path, format_net(b.net));
  std::cout << "build: ok\n"
            << "loop: " << identify(b.loop) << '\n'
            << "field: " << b.net.field.describe() << '\n'
            << "points: " << 3 * b.net.n << '\n'
            << "file: " << path << '\n';
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& file, const std::string& loop_file) {
  const auto any = read_net(file);
  std::optional<LoopTable> expected;
  if (!loop_file.empty()) expected = read_loop(loop_file);
  return std::visit(
      [&](const auto& net) {
        if (!g.field.empty() && g.field != (net.field.rational() ? "Q" : std::to_string(net.field.p)))
          throw UsageError("net is over " + net.field.describe() + ", not --field " + g.field);
        const auto report = verify(net, true, expected ? &*expected : nullptr);
        std::cout << "verify: " << (report.pass ? "pass" : "fail") << '\n'
                  << "field: " << net.field.describe() << '\n'
                  << "order: " << net.n << '\n';
        if (report.pass && report.table) std::cout << "loop: " << identify(*report.table) << '\n';
        if (report.counterexample) std::cout << "counterexample: " << describe(*report.counterexample) << '\n';
        return report.pass ? kOk : kNegative;
      },
      any);
}

int cmd_recover(const Globals& g, const std::string& file, int i0, int j0) {
  const auto any = read_net(file);
  return std::visit(
      [&](const auto& net) {
        if (i0 < 0 || i0 >= net.n || j0 < 0 || j0 >= net.n) throw UsageError("--at labels out of range");
        auto loop = recover_loop(net, i0, j0);
        loop.set_name(identify(loop));
        std::cout << "recover: ok\n" << "loop: " << loop.name() << '\n' << "order: " << loop.order() << '\n';
        if (!g.out.empty()) {
          write_text(g.out, format_loop(loop));
          std::cout << "file: " << g.out << '\n';
        }
        return kOk;
      },
      any);
}

int cmd_subnet(const Globals& g, const std::string& file, const std::vector<int>& elements) {
  const auto any = read_net(file);
  return std::visit(
      [&](const auto& net) {
        std::vector<int> sorted = elements;
        sorted.push_back(0);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        const auto sub = subnet(net, SubloopSet{sorted});
        const std::string path = g.out.empty() ? "subnet.net" : g.out;
        write_text(path, format_net(sub));
        std::cout << "subnet: ok\n"
                  << "order: " << sub.n << '\n'
                  << "loop: " << identify(recover_loop(sub)) << '\n'
                  << "file: " << path << '\n';
        return kOk;
      },
      any);
}

template <typename Scalar>
int report_fit(const std::vector<ProjPoint<Scalar>>& pts, int degree) {
  const auto basis = fit_curve(pts, degree);
  std::cout << "fit: " << (basis.empty() ? "none" : "curve") << '\n'
            << "points: " << pts.size() << '\n'
            << "dimension: " << basis.size() << '\n';
  for (const auto& f : basis) {
    std::cout << "form:";
    for (Eigen::Index i = 0; i < f.coeffs().size(); ++i) std::cout << ' ' << FieldTraits<Scalar>::to_string(f.coeffs()(i));
    std::cout << '\n';
  }
  return basis.empty() ? kNegative : kOk;
}

int cmd_fit(const Globals& g, const std::string& file, int degree) {
  if (degree != 2 && degree != 3) throw UsageError("--degree must be 2 or 3");
  const std::string text = read_text(file);
  std::istringstream probe(text);
  std::string first;
  for (std::string line; std::getline(probe, line);) {
    std::istringstream ss(line);
    if (ss >> first && first[0] != '#') break;
    first.clear();
  }
  std::istringstream in(text);
  auto check_field = [&](const Field& f) {
    if (!g.field.empty() && g.field != (f.rational() ? "Q" : std::to_string(f.p)))
      throw UsageError("file field " + f.describe() + " does not match --field " + g.field);
  };
  if (first == "net") {
    return std::visit(
        [&](const auto& net) {
          check_field(net.field);
          return report_fit(net.all_points(), degree);
        },
        parse_net(in));
  }
  return std::visit(
      [&](const auto& pts) {
        if (pts.empty()) throw UsageError("no points in " + file);
        check_field(pts.front().field());
        return report_fit(pts, degree);
      },
      parse_points(in));
}

std::vector<int> read_checkpoint(const std::string& path) {
  std::istringstream in(read_text(path));
  std::string word;
  in >> word;
  if (word != "checkpoint") throw Error(Errc::ParseError, "checkpoint file must start with 'checkpoint'");
  std::vector<int> pos;
  for (int v; in >> v;) pos.push_back(v);
  return pos;
}

int cmd_search(const Globals& g, const std::string& loop_file, std::optional<std::string> prime, bool exhaustive) {
  const auto loop = read_loop(loop_file);
  const auto p = resolve_prime(g, prime);
  SearchOptions opt;
  opt.budget = g.budget;
  opt.exhaustive = exhaustive;
  opt.workers = g.workers;
  if (!g.checkpoint.empty() && fs::exists(g.checkpoint)) {
    if (g.workers != 1) throw UsageError("resuming from a checkpoint needs --workers 1");
    opt.resume = read_checkpoint(g.checkpoint);
  }
  const auto r = search(loop, p, opt);

  const std::string dir = g.out.empty() ? "nets" : g.out;
  std::vector<std::string> files;
  for (std::size_t i = 0; i < r.nets.size(); ++i) {
    std::ostringstream name;
    name << "net_" << std::setw(4) << std::setfill('0') << i << ".net";
    files.push_back((fs::path(dir) / name.str()).string());
    write_text(files.back(), format_net(r.nets[i]));
  }

  const char* status = !r.complete ? "budget" : r.nets.empty() ? "none" : "found";
  std::cout << "search: " << status << '\n'
            << "loop: " << identify(loop) << '\n'
            << "field: GF(" << p << ")\n"
            << "nets: " << r.nets.size() << '\n'
            << "nodes: " << r.nodes << '\n'
            << "mode: " << (exhaustive ? "exhaustive" : "first") << '\n'
            << "plan: g=" << r.plan.g << " h=" << r.plan.h << " forced " << r.plan.count(PointStatus::forced)
            << ", one-parameter " << r.plan.count(PointStatus::one_parameter) << ", free "
            << r.plan.count(PointStatus::free) << '\n'
            << "hypothesis: " << (r.hypothesis_met ? "p > n" : "p <= n (not theorem-comparable)") << '\n';
  for (const auto& f : files) std::cout << "file: " << f << '\n';

  if (!r.complete) {
    if (!g.checkpoint.empty() && !r.checkpoint.empty()) {
      std::ostringstream os;
      os << "checkpoint";
      for (int v : r.checkpoint) os << ' ' << v;
      os << '\n';
      write_text(g.checkpoint, os.str());
      std::cout << "checkpoint: " << g.checkpoint << '\n';
    }
    return kBudget;
  }
  if (!g.checkpoint.empty() && fs::exists(g.checkpoint)) fs::remove(g.checkpoint);
  if (r.nets.empty()) {
    if (exhaustive) std::cout << "note: no realization over GF(" << p << ") up to projectivity\n";
    return kNegative;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual 3-nets realizing finite loops: catalog, gates, builders, verification and search."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every command and exit");

  Globals g;
  app.add_option("--field", g.field, "Prime p (or Q where rationals are accepted)");
  app.add_option("--out", g.out, "Output file (or directory for search)");
  app.add_option("--budget", g.budget, "Node budget for searches")->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "Search worker threads")->check(CLI::Range(1, 256));
  app.add_option("--checkpoint", g.checkpoint, "Checkpoint file; resumed from when present");

  std::vector<std::string> catalog_args, build_args;
  std::string file, loop_file;
  std::optional<std::string> prime;
  std::vector<int> at, elements;
  int degree = 3;
  bool exhaustive = false;

  auto* catalog = app.add_subcommand("catalog", "Write a named loop to a file");
  catalog->add_option("name", catalog_args, "Name and parameters")->required();
  auto* probe = app.add_subcommand("probe", "Structure report of a loop");
  probe->add_option("loop", file)->required();
  auto* gate = app.add_subcommand("gate", "Necessary conditions for realizability");
  gate->add_option("loop", file)->required();
  auto* build = app.add_subcommand("build", "Construct a net (triangular, conic-line, elliptic, tetrahedron, pencil)");
  build->add_option("family", build_args, "Family and parameters")->required();
  auto* ver = app.add_subcommand("verify", "Check the net axiom and labels");
  ver->add_option("net", file)->required();
  ver->add_option("--loop", loop_file, "Expected loop table");
  auto* rec = app.add_subcommand("recover", "Read the coordinatizing loop off a net");
  rec->add_option("net", file)->required();
  rec->add_option("--at", at, "Row and column labels of the principal isotope")->expected(2);
  auto* sub = app.add_subcommand("subnet", "Restrict a net to a subloop");
  sub->add_option("net", file)->required();
  sub->add_option("elements", elements, "Subloop elements")->required();
  auto* fit = app.add_subcommand("fit", "Curves of given degree through a point or net file");
  fit->add_option("file", file)->required();
  fit->add_option("--degree", degree, "2 or 3");
  auto* srch = app.add_subcommand("search", "Search realizations over GF(p)");
  srch->add_option("loop", loop_file)->required();
  srch->add_option("p", prime);
  srch->add_flag("--exhaustive", exhaustive, "Enumerate all nets instead of stopping at the first");
  for (auto* s : {catalog, probe, gate, build, ver, rec, sub, fit, srch}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "catalog") return cmd_catalog(g, catalog_args);
    if (command == "probe") return cmd_probe(file);
    if (command == "gate") return cmd_gate(file);
    if (command == "build") return cmd_build(g, build_args);
    if (command == "verify") return cmd_verify(g, file, loop_file);
    if (command == "recover") return cmd_recover(g, file, at.empty() ? 0 : at[0], at.empty() ? 0 : at[1]);
    if (command == "subnet") return cmd_subnet(g, file, elements);
    if (command == "fit") return cmd_fit(g, file, degree);
    if (command == "search") return cmd_search(g, loop_file, prime, exhaustive);
  } catch (const UsageError& e) {
    std::cout << command << ": usage\n";
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    const Errc c = e.code();
    // malformed input files and bad parameters
    const bool usage = c == Errc::ParseError || c == Errc::BadParameter || c == Errc::RowNotPermutation ||
                       c == Errc::ColNotPermutation || c == Errc::NoUnit || c == Errc::EntryOutOfRange ||
                       c == Errc::NotAnSTS;
    const bool budget = c == Errc::BudgetExceeded;
    std::cout << command << ": " << (usage ? "usage" : budget ? "budget" : "error") << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return usage ? kUsage : budget ? kBudget : kNegative;
  }
  return kUsage;
}
