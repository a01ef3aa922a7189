#include "cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "sperner/c_order.hpp"
#include "sperner/claims.hpp"
#include "sperner/errors.hpp"
#include "sperner/order_core.hpp"
#include "sperner/poset_io.hpp"
#include "sperner/sampler.hpp"
#include "sperner/truncation.hpp"

namespace sperner::cli {
namespace {

struct Options {
  std::size_t max_bruteforce = Limits{}.max_bruteforce;
  std::size_t max_elements = kDefaultMaxTruncation;

  std::string file;
  bool splitting = false;
  bool strongly_dense = false;
  bool list_antichains = false;
  std::string dot_out;

  std::string lhs, rhs;

  unsigned levels = 2;
  unsigned depth = 2;
  std::string format = "text";
  std::string out_path;

  SampleConfig sample;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw InputError("cannot write '" + path + "'");
  f << text;
}

int check_finite(const Options& o, std::ostream& out) {
  const Limits limits{o.max_bruteforce};
  const FinitePoset p = read_poset_file(o.file);
  out << "elements=" << p.size() << " covers=" << transitive_reduction(p).size() << "\n";
  bool ok = true;
  if (o.list_antichains) {
    const auto all = enumerate_maximal_antichains(p, limits);
    out << "maximal_antichains=" << all.size() << "\n";
    for (const auto& a : all)
      out << "  " << p.format(a) << "\n";
  }
  if (o.splitting) {
    const SplittingVerdict v = has_splitting_property(p, limits);
    out << "splitting=" << (v.holds ? "true" : "false") << " antichains_tested=" << v.antichains_tested;
    if (v.counterexample)
      out << " witness=" << p.format(*v.counterexample);
    out << "\n";
    ok = ok && v.holds;
  }
  if (o.strongly_dense) {
    const DensityVerdict v = is_strongly_dense(p);
    out << "strongly_dense=" << (v.holds ? "true" : "false");
    if (v.failing_interval) {
      const auto [x, y] = *v.failing_interval;
      out << " interval=(" << p.name(x) << "," << p.name(y) << ")"
          << " between=" << p.format(open_interval(p, x, y));
    }
    out << "\n";
    ok = ok && v.holds;
  }
  if (!o.dot_out.empty())
    write_output(o.dot_out, write_dot(p), out);
  return ok ? kOk : kPropertyFails;
}

int c_leq_cmd(const Options& o, std::ostream& out) {
  const CElement x = parse_celement(o.lhs);
  const CElement y = parse_celement(o.rhs);
  out << to_symbol(compare(x, y)) << "\n";
  return kOk;
}

int c_truncate(const Options& o, std::ostream& out) {
  const Truncation t = truncate({o.levels, o.depth}, o.max_elements);
  const std::string text = o.format == "dot" ? write_dot(t.poset()) : write_poset_text(t.poset());
  write_output(o.out_path, text, out);
  return kOk;
}

int c_claims(const Options& o, std::ostream& out) {
  const MaximalityReport maximal = verify_antichain_maximality({o.levels, o.depth}, o.max_elements);
  const NonSplittingReport split = verify_antichain_non_splitting();
  out << to_text(maximal) << to_text(split);
  return maximal.passed() && split.passed() ? kOk : kPropertyFails;
}

int verify_aeg_cmd(const Options& o, std::ostream& out) {
  const AegReport r = verify_aeg(o.sample, Limits{o.max_bruteforce});
  out << r.to_text();
  return r.passed() ? kOk : kPropertyFails;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite poset analysis and the strongly dense non-splitting poset C", "sperner"};
  app.require_subcommand(1, 1);
  app.add_option("--max-bruteforce", o.max_bruteforce,
                 "Largest poset / antichain for exhaustive subset searches");
  app.add_option("--max-elements", o.max_elements, "Largest truncation of C to materialize");

  auto* check = app.add_subcommand("check-finite", "Analyse a finite poset file");
  check->add_option("file", o.file, "Poset text file")->required();
  check->add_flag("--splitting", o.splitting, "Check the splitting property");
  check->add_flag("--strongly-dense", o.strongly_dense, "Check strong density");
  check->add_flag("--list-maximal-antichains", o.list_antichains, "Print every maximal antichain");
  check->add_option("--dot", o.dot_out, "Write the Hasse diagram as DOT");

  auto* leq = app.add_subcommand("c-leq", "Compare two elements of C");
  leq->add_option("x", o.lhs, "Element literal")->required();
  leq->add_option("y", o.rhs, "Element literal")->required();

  auto* trunc = app.add_subcommand("c-truncate", "Export a finite truncation of C");
  trunc->add_option("--levels", o.levels, "Highest stage")->required();
  trunc->add_option("--depth", o.depth, "Longest word")->required();
  trunc->add_option("--format", o.format, "text or dot")->check(CLI::IsMember({"text", "dot"}));
  trunc->add_option("--out", o.out_path, "Output path (default stdout)");

  auto* claims = app.add_subcommand("c-claims", "Verify maximality and non-splitting of {x,y}");
  claims->add_option("--levels", o.levels, "Highest stage of the truncation");
  claims->add_option("--depth", o.depth, "Longest word of the truncation");

  auto* aeg = app.add_subcommand("verify-aeg", "Check that sampled finite strongly dense posets split");
  aeg->add_option("--size", o.sample.size, "Elements per poset")->required();
  aeg->add_option("--count", o.sample.count, "Strongly dense samples to test");
  aeg->add_option("--seed", o.sample.seed, "Random seed");
  aeg->add_option("--density", o.sample.edge_density, "Cover-pair probability");

  std::vector<std::string> argv_store{"sperner"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed())
      return check_finite(o, out);
    if (leq->parsed())
      return c_leq_cmd(o, out);
    if (trunc->parsed())
      return c_truncate(o, out);
    if (claims->parsed())
      return c_claims(o, out);
    return verify_aeg_cmd(o, out);
  } catch (const SamplingError& e) {
    err << "error: " << e.what() << "\n";
    return kPropertyFails;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

} // namespace sperner::cli
