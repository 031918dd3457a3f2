#pragma once

// Command-line front end.  `run` takes argv-style arguments and two streams
// so tests can drive it in-process.
//
// Exit status: 0 success, 1 domain or validation error, 2 usage or parse
// error.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordcalc/ordcalc.hpp"

namespace ordcalc::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

namespace detail {

inline const char* comparison_symbol(Comparison c) {
  switch (c) {
    case Comparison::Less: return "<";
    case Comparison::Equal: return "=";
    case Comparison::Greater: return ">";
  }
  return "?";
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("ORDCALC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("ORDCALC_SEED must be a nonnegative integer");
    }
  }
  return 0;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal calculator: Cantor normal forms, transfinite natural sums, tree sizes", "ordcalc"};
  app.require_subcommand(1);

  std::string expr_a;
  std::string expr_b;
  std::string file;

  auto* eval = app.add_subcommand("eval", "Print the normal form of an expression");
  eval->add_option("expr", expr_a, "Ordinal expression")->required();

  auto* cmp = app.add_subcommand("cmp", "Compare two expressions: <, = or >");
  cmp->add_option("lhs", expr_a)->required();
  cmp->add_option("rhs", expr_b)->required();

  auto* itersum = app.add_subcommand("itersum", "Iterated natural sum of a sequence file");
  itersum->add_option("file", file)->required();

  auto* ordsum = app.add_subcommand("ordsum", "Ordinary transfinite sum of a sequence file");
  ordsum->add_option("file", file)->required();

  std::string steps_file;
  bool all_natural = false;
  bool all_ordinary = false;
  auto* gsum = app.add_subcommand("gsum", "Sum with natural steps at a chosen set of positions");
  gsum->add_option("file", file)->required();
  auto* steps_opt = gsum->add_option("--steps", steps_file, "Step-set file");
  auto* nat_flag = gsum->add_flag("--all-natural", all_natural);
  auto* ord_flag = gsum->add_flag("--all-ordinary", all_ordinary);
  steps_opt->excludes(nat_flag, ord_flag);
  nat_flag->excludes(ord_flag);

  auto* spectrum = app.add_subcommand("spectrum", "All values of the step-set sums, ascending");
  spectrum->add_option("file", file)->required();

  auto* tail = app.add_subcommand("tail", "Where the tail of a limit-length sum becomes a single power");
  tail->add_option("file", file)->required();

  auto* carruth = app.add_subcommand("carruth", "Order types of all pure interleavings of two ordinals");
  carruth->add_option("lhs", expr_a)->required();
  carruth->add_option("rhs", expr_b)->required();

  bool exact = false;
  bool bound = false;
  std::uint64_t nsum_seed = 0;
  std::size_t nsum_count = 16;
  auto* nsum = app.add_subcommand("nsum", "Order-free natural sum of a multiset file");
  nsum->add_option("file", file)->required();
  auto* exact_flag = nsum->add_flag("--exact", exact);
  auto* bound_flag = nsum->add_flag("--bound", bound);
  exact_flag->excludes(bound_flag);
  nsum->add_option("--seed", nsum_seed, "Seed for the arrangement families")->capture_default_str();
  nsum->add_option("--count", nsum_count, "Members per arrangement family")->capture_default_str();

  auto* treesize = app.add_subcommand("treesize", "Size, rank and extension order type of a tree file");
  treesize->add_option("file", file)->required();

  std::string suite = "all";
  std::optional<std::uint64_t> check_seed;
  std::size_t cases = 100;
  auto* check = app.add_subcommand("check", "Run seeded property suites");
  check->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  check->add_option("--seed", check_seed, "Seed (default: $ORDCALC_SEED, else 0)");
  check->add_option("--cases", cases, "Cases per suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*eval) {
      out << print_ordinal(parse_ordinal(expr_a)) << '\n';
    } else if (*cmp) {
      out << detail::comparison_symbol(compare(parse_ordinal(expr_a), parse_ordinal(expr_b))) << '\n';
    } else if (*itersum) {
      out << print_ordinal(iter_nat_sum(sequence_from_json(read_json_file(file)))) << '\n';
    } else if (*ordsum) {
      out << print_ordinal(iter_ord_sum(sequence_from_json(read_json_file(file)))) << '\n';
    } else if (*gsum) {
      const SeqDesc s = sequence_from_json(read_json_file(file));
      StepSet g;
      if (!steps_file.empty()) {
        g = steps_from_json(read_json_file(steps_file));
      } else if (all_natural) {
        g = StepSet::all_natural();
      } else if (all_ordinary) {
        g = StepSet::all_ordinary();
      } else {
        err << "gsum needs one of --steps FILE, --all-natural, --all-ordinary\n";
        return kUsageError;
      }
      out << print_ordinal(g_sum(s, g)) << '\n';
    } else if (*spectrum) {
      for (const auto& v : g_sum_spectrum(sequence_from_json(read_json_file(file)))) out << print_ordinal(v) << '\n';
    } else if (*tail) {
      const auto tc = tail_character(sequence_from_json(read_json_file(file)));
      out << "gamma_bar: " << print_ordinal(tc.gamma_bar) << '\n' << "xi: " << print_ordinal(tc.xi) << '\n';
    } else if (*carruth) {
      const Ordinal a = parse_ordinal(expr_a);
      const Ordinal b = parse_ordinal(expr_b);
      const auto values = enumerate_pure_interleavings(a, b);
      for (const auto& v : values) out << print_ordinal(v) << '\n';
      const Ordinal sum = nat_add(a, b);
      out << "max: " << print_ordinal(values.back()) << '\n' << "natural sum: " << print_ordinal(sum) << '\n';
      if (values.back() != sum) {
        err << "maximum interleaving differs from the natural sum\n";
        return kDomainError;
      }
    } else if (*nsum) {
      if (!exact && !bound) {
        err << "nsum needs --exact or --bound\n";
        return kUsageError;
      }
      const OrdMultiset m = multiset_from_json(read_json_file(file));
      if (exact) {
        const auto v = exact_nsum(m);
        if (!v) {
          err << "no exact method for this uncountable multiset; use --bound\n";
          return kDomainError;
        }
        out << "nsum: " << print_ordinal(v->any_length) << '\n'
            << "nsum-initial-length: " << print_ordinal(v->initial_length) << '\n';
      } else {
        const auto b = nsum_bounds(m, nsum_seed, nsum_count);
        const auto show = [](const std::optional<Ordinal>& v) { return v ? print_ordinal(*v) : std::string("none"); };
        out << "lower: " << print_ordinal(b.lower) << '\n'
            << "upper-any-length: " << show(b.upper_any_length) << " (" << b.any_length_count << " arrangements)\n"
            << "upper-initial-length: " << show(b.upper_initial_length) << " (" << b.initial_length_count
            << " arrangements)\n";
      }
    } else if (*treesize) {
      const TreeDesc t = tree_from_json(read_json_file(file));
      out << "size: " << print_ordinal(size(t)) << '\n'
          << "rank: " << print_ordinal(rank(t)) << '\n'
          << "extension: " << print_ordinal(extension_order_type(t)) << '\n';
    } else if (*check) {
      const std::uint64_t seed = check_seed ? *check_seed : detail::default_seed();
      bool ok = true;
      for (const auto& r : run_suites(suite, seed, cases)) {
        out << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
        for (const auto& f : r.failures) out << "  case " << f.case_index << ": " << f.message << '\n';
        ok = ok && r.ok();
      }
      return ok ? kOk : kDomainError;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ordcalc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ordcalc::cli
