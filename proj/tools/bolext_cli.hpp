#pragma once

// Command-line front end. Each subcommand parses its flags, calls one
// library entry point and formats the result.
//
// Exit codes: 0 success / conforms, 1 nonconforming verdict (or a negative
// answer for `iso`, a path disagreement for `check`), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bolext/bolext.hpp"
#include "bolext/serialize.hpp"

namespace bolext::cli {

inline constexpr int kOk = 0;
inline constexpr int kNonconforming = 1;
inline constexpr int kUsage = 2;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Cayley text or the JSON table form (detected by a leading '{').
inline CayleyTable load_table(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return magma_from_json(json::parse(text)).table();
  std::istringstream is(text);
  return read_cayley_text(is);
}

inline FiniteGroup load_group(const std::string& name, const std::string& file) {
  if (!file.empty()) return from_cayley_table(load_table(file), file);
  if (name.empty()) throw UsageError("need --group or --group-file");
  return group_by_name(name);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw UsageError("cannot write '" + output + "'");
  f << text;
}

inline void print_check(std::ostream& out, std::string_view label, const CheckResult& r) {
  out << label << ": " << (r.holds ? "holds" : "fails");
  if (!r.holds) {
    out << " at (";
    for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? "," : "") << r.witness[i];
    out << ")";
  }
  out << '\n';
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
  out << (v.applicable ? (v.conforms ? "[ok]   " : "[FAIL] ") : "[n/a]  ") << v.name << ": " << v.statement << '\n';
  for (const auto& m : v.mismatches) out << "         mismatch: " << m << '\n';
  for (const auto& n : v.notes) out << "         " << n << '\n';
}

}  // namespace detail

/// The two order-8 left Bol loops over C4 in the 1..8 block rendering.
inline std::string remark_tables() {
  const FiniteGroup c4 = make_cyclic(4);
  std::ostringstream os;
  const auto& c = constructions::abelian_bol_delta;
  const auto& b = constructions::abelian_bol_beta;
  os << "(" << c.str() << ") over C4\n" << render_blocks(build(c4, c)) << '\n';
  os << "(" << b.str() << ") over C4\n" << render_blocks(build(c4, b));
  return os.str();
}

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loop extensions of finite groups by twisted multiplications", "bolext"};
  app.require_subcommand(1, 1);

  std::string group, group_file, tuple_text, output, format = "text", identity = "all", scope = "assumptions";
  std::string file_a, file_b, groups_text;
  unsigned jobs = 1;
  std::uint64_t seed = 20070101;
  bool as_json = false;

  auto add_group = [&](CLI::App* sc) {
    sc->add_option("--group", group, "built-in group: Cn, D2k, Q8, Sk, or products like C4xC2");
    sc->add_option("--group-file", group_file, "group Cayley table file");
  };

  auto* construct = app.add_subcommand("construct", "print the extension table for a group and tuple");
  add_group(construct);
  construct->add_option("--tuple", tuple_text, "alpha,beta,gamma,delta, e.g. xy,xy,xy,x-y")->required();
  construct->add_option("--format", format, "text | pretty | json")->check(CLI::IsMember({"text", "pretty", "json"}));
  construct->add_option("-o,--output", output, "write to file instead of stdout");

  auto* check = app.add_subcommand("check", "evaluate identities directly and through the translated forms");
  add_group(check);
  check->add_option("--tuple", tuple_text, "alpha,beta,gamma,delta");
  check->add_option("--table", file_a, "check a table file instead (direct path only)");
  check->add_option("--identity", identity, "identity name or 'all'");

  auto* classify = app.add_subcommand("classify", "enumerate a tuple space and classify every extension");
  add_group(classify);
  classify->add_option("--scope", scope, "full | loops | assumptions")
      ->check(CLI::IsMember({"full", "loops", "assumptions"}));
  classify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  classify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  classify->add_option("--seed", seed, "seed for the spot-check sample");
  classify->add_option("-o,--output", output, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "check the classification statements for a group");
  add_group(verify);
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--seed", seed, "seed for the spot-check sample");
  verify->add_flag("--json", as_json, "machine-readable report");

  auto* iso = app.add_subcommand("iso", "decide whether two loop tables are isomorphic");
  iso->add_option("a", file_a, "first table")->required();
  iso->add_option("b", file_b, "second table")->required();

  auto* distance = app.add_subcommand("distance", "count cells on which two tables differ");
  distance->add_option("a", file_a, "first table")->required();
  distance->add_option("b", file_b, "second table")->required();

  auto* tables = app.add_subcommand("tables", "print the two order-8 left Bol tables over C4");

  auto* search = app.add_subcommand("search-exceptional", "look for isomorphisms between loops over different groups");
  search->add_option("--groups", groups_text, "comma-separated group names")->required();
  search->add_flag("--json", as_json, "machine-readable report");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    EnumerateOptions opt;
    opt.jobs = jobs;
    opt.seed = seed;

    if (*construct) {
      const FiniteGroup g = detail::load_group(group, group_file);
      const MagmaTable t = build(g, Tuple::parse(tuple_text));
      std::string text;
      if (format == "json") text = to_json(t).dump(2) + "\n";
      else if (format == "pretty") text = render_blocks(t);
      else text = to_cayley_text(t);
      detail::emit(text, output, out);
      return kOk;
    }

    if (*check) {
      std::vector<IdentityId> ids;
      if (identity == "all") ids.assign(kAllIdentities.begin(), kAllIdentities.end());
      else ids.push_back(parse_identity(identity));
      if (!file_a.empty()) {
        const MagmaTable t(detail::load_table(file_a));
        const bool loop = check_direct(t, IdentityId::is_loop).holds;
        for (IdentityId id : ids) {
          if (!loop && (id == IdentityId::moufang || id >= IdentityId::two_sided_inverses)) {
            out << identity_name(id) << ": skipped (not a loop)\n";
            continue;
          }
          detail::print_check(out, identity_name(id), check_direct(t, id));
        }
        return kOk;
      }
      if (tuple_text.empty()) throw detail::UsageError("check needs --tuple (with a group) or --table");
      const ExtensionSpec spec(detail::load_group(group, group_file), Tuple::parse(tuple_text));
      const MagmaTable t = build(spec);
      const bool loop = check_direct(t, IdentityId::is_loop).holds;
      bool agree = true;
      for (IdentityId id : ids) {
        const bool needs_loop = id == IdentityId::moufang || id >= IdentityId::two_sided_inverses;
        if (needs_loop && !loop) {
          out << identity_name(id) << ": skipped (not a loop)\n";
          continue;
        }
        const CheckResult direct = check_direct(t, id);
        detail::print_check(out, std::string(identity_name(id)) + " [direct]", direct);
        if ((id == IdentityId::left_alternative || id == IdentityId::left_bol) && loop_conditions(spec)) {
          const TranslatedCheck tr = check_translated(spec, id);
          detail::print_check(out, std::string(identity_name(id)) + " [translated]", tr.result);
          for (const auto& part : tr.parts)
            if (!part.result.holds) out << "    " << part.label << " (" << part.pattern << ") fails\n";
          const bool same = tr.result.holds == direct.holds;
          agree = agree && same;
          out << "    paths " << (same ? "agree" : "DISAGREE") << '\n';
        }
      }
      return agree ? kOk : kNonconforming;
    }

    if (*classify) {
      const FiniteGroup g = detail::load_group(group, group_file);
      const auto rep = enumerate(g, parse_scope(scope), opt);
      std::ostringstream os;
      if (format == "csv") write_csv(os, rep);
      else os << to_json(rep).dump(2) << '\n';
      detail::emit(os.str(), output, out);
      return kOk;
    }

    if (*verify) {
      const FiniteGroup g = detail::load_group(group, group_file);
      const TheoremReport rep = verify_theorem(g, opt);
      if (as_json) {
        out << to_json(rep).dump(2) << '\n';
      } else {
        out << "group " << rep.group << '\n';
        for (const auto& v : rep.verdicts) detail::print_verdict(out, v);
        for (const auto& d : rep.discrepancies) out << "discrepancy: " << d << '\n';
        for (const auto& n : rep.open_notes) out << "open question: " << n << '\n';
        if (rep.refused) out << "refused: " << rep.reason << '\n';
        else out << (rep.conforms() ? "verdict: conforms to the classification\n" : "verdict: DOES NOT CONFORM\n");
      }
      return rep.conforms() ? kOk : kNonconforming;
    }

    if (*iso) {
      const MagmaTable a(detail::load_table(file_a));
      const MagmaTable b(detail::load_table(file_b));
      if (auto w = is_isomorphic(a, b)) {
        out << "isomorphic\n" << w->str() << '\n';
        return kOk;
      }
      out << "not isomorphic\n";
      return kNonconforming;
    }

    if (*distance) {
      out << drapal_distance(detail::load_table(file_a), detail::load_table(file_b)) << '\n';
      return kOk;
    }

    if (*tables) {
      out << remark_tables();
      return kOk;
    }

    if (*search) {
      std::vector<FiniteGroup> gs;
      for (const auto& name : detail::split(groups_text, ',')) gs.push_back(group_by_name(name));
      const auto rep = search_exceptional_isomorphisms(gs);
      if (as_json) {
        out << to_json(rep).dump(2) << '\n';
        return kOk;
      }
      out << rep.entries.size() << " loops in " << rep.classes.size() << " isomorphism classes\n";
      for (std::size_t c = 0; c < rep.classes.size(); ++c) {
        const bool exceptional =
            std::find(rep.exceptional.begin(), rep.exceptional.end(), c) != rep.exceptional.end();
        out << (exceptional ? "* " : "  ") << "class " << c << ':';
        for (std::size_t e : rep.classes[c])
          out << ' ' << rep.entries[e].group << "(" << rep.entries[e].tuple.str() << ")";
        out << '\n';
      }
      out << rep.exceptional.size() << " class(es) mix nonisomorphic base groups\n";
      return kOk;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bolext::cli
