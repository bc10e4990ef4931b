#include "apxconv/cli.hpp"

#include <algorithm>
#include <functional>

#include "CLI11.hpp"
#include "apxconv/checks.hpp"
#include "apxconv/gen.hpp"
#include "apxconv/io.hpp"
#include "apxconv/ptfree.hpp"

namespace apxconv {

namespace {

void dedupe_notes(Report& rep) {
  std::vector<std::string> kept;
  for (auto& n : rep.notes)
    if (std::find(kept.begin(), kept.end(), n) == kept.end())
      kept.push_back(std::move(n));
  rep.notes = std::move(kept);
}

int emit(Report rep, const std::string& format, std::ostream& out) {
  dedupe_notes(rep);
  if (format == "machine")
    render_machine(rep, out);
  else
    render_text(rep, out);
  return rep.exit_code();
}

/// Key/value output for compute commands, stable order, tab separated in
/// machine format.
struct KvOut {
  std::ostream& out;
  bool machine;
  void line(const std::string& key, const std::string& value) {
    out << key << (machine ? "\t" : ": ") << value << "\n";
  }
};

int fail_usage(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return 2;
}

/// Loads and validates; returns nullopt after printing when the space fails
/// its axioms (exit 1) or cannot be read (exit 2).
std::optional<NamedSpace> load_valid_space(const std::string& path,
                                           std::ostream& err, int& rc) {
  NamedSpace ns;
  try {
    ns = load_space(path);
  } catch (const std::exception& e) {
    rc = fail_usage(err, std::string(e.what()));
    return std::nullopt;
  }
  const ValidationReport v = validate(ns.space);
  if (!v.ok()) {
    err << "space " << ns.name << " violates its axioms:\n";
    for (const auto& viol : v.violations) err << "  " << viol << "\n";
    rc = 1;
    return std::nullopt;
  }
  return ns;
}

int cmd_validate(const std::string& path, const std::string& format,
                 std::ostream& out, std::ostream& err) {
  NamedSpace ns;
  try {
    ns = load_space(path);
  } catch (const std::exception& e) {
    return fail_usage(err, e.what());
  }
  return emit(run_validate_checks(ns), format, out);
}

int cmd_info(const std::string& path, const std::string& format,
             std::ostream& out, std::ostream& err) {
  NamedSpace ns;
  try {
    ns = load_space(path);
  } catch (const std::exception& e) {
    return fail_usage(err, e.what());
  }
  const CapSpace& s = ns.space;
  KvOut kv{out, format == "machine"};
  kv.line("space", ns.name);
  kv.line("mode", to_string(s.mode));
  std::string pts;
  for (const auto& n : s.carrier.names) pts += (pts.empty() ? "" : " ") + n;
  kv.line("points", pts);
  const bool valid = validate(s).ok();
  kv.line("valid", valid ? "yes" : "no");
  if (!valid) return 1;
  if (s.carrier.size() > 10) {
    kv.line("classification", "skipped (carrier too large)");
    return 0;
  }
  kv.line("pseudo-approach", is_psap(s) ? "yes" : "no");
  kv.line("pre-approach", is_prap(s) ? "yes" : "no");
  kv.line("approach", is_approach(s) ? "yes" : "no");
  const FiniteConvergence r = r_reflect(s);
  std::string closed;
  for (Subset a : closed_sets(r))
    closed += (closed.empty() ? "" : " ") + s.carrier.subset_to_string(a);
  kv.line("r-closed-sets", closed);
  return 0;
}

int cmd_reflect(const std::string& path, const std::string& to,
                const std::string& style, std::ostream& out, std::ostream& err) {
  int rc = 0;
  auto ns = load_valid_space(path, err, rc);
  if (!ns) return rc;
  CapSpace refl = to == "psap"  ? psap_reflection(ns->space)
                  : to == "prap" ? prap_reflection(ns->space)
                                 : ap_reflection(ns->space);
  NamedSpace res{ns->name + "-" + to, std::move(refl)};
  out << serialize_space(res, style == "full" ? SerializeStyle::Full
                                              : SerializeStyle::Terse);
  return 0;
}

int cmd_closure(const std::string& path, const std::string& set_text,
                const std::string& format, std::ostream& out, std::ostream& err) {
  int rc = 0;
  auto ns = load_valid_space(path, err, rc);
  if (!ns) return rc;
  Subset a = 0;
  try {
    a = parse_subset(ns->space.carrier, set_text);
  } catch (const std::exception& e) {
    return fail_usage(err, e.what());
  }
  KvOut kv{out, format == "machine"};
  kv.line("set", ns->space.carrier.subset_to_string(a));
  kv.line("closure", to_string(closure_fn(ns->space, a)));
  kv.line("adherence", to_string(adh_set(ns->space, a)));
  kv.line("r-closed", is_closed(r_reflect(ns->space), a) ? "yes" : "no");
  return 0;
}

int cmd_hull(const std::string& path, const std::string& fn_path,
             const std::string& format, std::ostream& out, std::ostream& err) {
  int rc = 0;
  auto ns = load_valid_space(path, err, rc);
  if (!ns) return rc;
  VFunction f{};
  try {
    f = load_vfunction(fn_path, ns->space.carrier, ns->space.mode);
  } catch (const std::exception& e) {
    return fail_usage(err, e.what());
  }
  KvOut kv{out, format == "machine"};
  kv.line("fn", to_string(f));
  kv.line("hull", to_string(lower_hull(ns->space, f)));
  kv.line("continuous", is_continuous_to_V(ns->space, f) ? "yes" : "no");
  return 0;
}

int cmd_check(const std::string& path, bool laws, bool thms,
              const std::string& format, std::ostream& out, std::ostream& err) {
  NamedSpace ns;
  try {
    ns = load_space(path);
  } catch (const std::exception& e) {
    return fail_usage(err, e.what());
  }
  Report rep = run_validate_checks(ns);
  if (rep.all_pass()) {
    if (laws) rep.merge(run_law_checks(ns));
    if (thms) rep.merge(run_theorem_checks(ns));
  } else {
    rep.note("axioms failed; law and theorem checks skipped");
  }
  return emit(std::move(rep), format, out);
}

int cmd_contraction(const std::string& map_path, const std::string& from_path,
                    const std::string& to_path, const std::string& format,
                    std::ostream& out, std::ostream& err) {
  int rc = 0;
  auto from = load_valid_space(from_path, err, rc);
  if (!from) return rc;
  auto to = load_valid_space(to_path, err, rc);
  if (!to) return rc;
  PointMap f{};
  try {
    require_same_mode(from->space.mode, to->space.mode);
    f = load_pointmap(map_path, from->space.carrier, to->space.carrier);
  } catch (const std::exception& e) {
    return fail_usage(err, e.what());
  }
  return emit(run_contraction_checks(f, *from, *to), format, out);
}

int cmd_frame(const std::string& path, const std::string& which,
              const std::string& format, std::ostream& out, std::ostream& err) {
  int rc = 0;
  auto ns = load_valid_space(path, err, rc);
  if (!ns) return rc;
  ConvFrame frame{};
  try {
    frame = lim_from_cap(ns->space);
  } catch (const std::exception& e) {
    return fail_usage(err, e.what());
  }
  return emit(run_frame_checks(frame, which), format, out);
}

int cmd_gen(std::uint64_t seed, int points, int chain, const std::string& flavor,
            const std::string& style, std::ostream& out, std::ostream& err) {
  GenFlavor fl = flavor == "prap" ? GenFlavor::Prap
                 : flavor == "ap" ? GenFlavor::Ap
                                  : GenFlavor::Raw;
  CapSpace s{};
  try {
    s = gen_space(seed, points, chain, fl);
  } catch (const std::exception& e) {
    return fail_usage(err, e.what());
  }
  NamedSpace ns{"gen-s" + std::to_string(seed) + "-p" + std::to_string(points) +
                    "-c" + std::to_string(chain) + "-" + flavor,
                std::move(s)};
  out << serialize_space(ns, style == "full" ? SerializeStyle::Full
                                             : SerializeStyle::Terse);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite convergence-approach spaces: validation, reflections, "
               "hulls and frame-side checks"};
  app.name("apxconv");
  app.require_subcommand(1);

  std::string path, format = "text", style = "terse";
  std::string to, set_text, fn_path, map_path, from_path, to_path, which;
  std::string flavor = "raw";
  bool laws = false, thms = false, all = false;
  std::uint64_t seed = 0;
  int points = 3, chain = 2;
  int exit_code = 0;
  // Deferred so parsing finishes (and usage errors exit 2) before any work.
  std::function<void()> action;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_style = [&](CLI::App* sub) {
    sub->add_option("--style", style, "full or terse serialization")
        ->check(CLI::IsMember({"full", "terse"}));
  };

  {
    CLI::App* sub = app.add_subcommand("validate", "check the table axioms");
    sub->add_option("file", path, "space file")->required();
    add_format(sub);
    sub->callback([&] {
      action = [&] { exit_code = cmd_validate(path, format, out, err); };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("info", "summarize a space");
    sub->add_option("file", path, "space file")->required();
    add_format(sub);
    sub->callback([&] {
      action = [&] { exit_code = cmd_info(path, format, out, err); };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("reflect", "project onto a subcategory");
    sub->add_option("file", path, "space file")->required();
    sub->add_option("--to", to, "psap, prap or ap")
        ->required()
        ->check(CLI::IsMember({"psap", "prap", "ap"}));
    add_style(sub);
    sub->callback([&] {
      action = [&] { exit_code = cmd_reflect(path, to, style, out, err); };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("closure", "closure of a point set");
    sub->add_option("file", path, "space file")->required();
    sub->add_option("--set", set_text, "subset, e.g. {p,q}")->required();
    add_format(sub);
    sub->callback([&] {
      action = [&] { exit_code = cmd_closure(path, set_text, format, out, err); };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("hull", "least continuous function above");
    sub->add_option("file", path, "space file")->required();
    sub->add_option("--fn", fn_path, "function file")->required();
    add_format(sub);
    sub->callback([&] {
      action = [&] { exit_code = cmd_hull(path, fn_path, format, out, err); };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("check", "run the law/theorem registry");
    sub->add_option("file", path, "space file")->required();
    sub->add_flag("--laws", laws, "algebraic and operator laws");
    sub->add_flag("--theorems", thms, "structural theorems");
    sub->add_flag("--all", all, "both (the default)");
    add_format(sub);
    sub->callback([&] {
      action = [&] {
        const bool both = all || (!laws && !thms);
        exit_code =
            cmd_check(path, laws || both, thms || both, format, out, err);
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("contraction", "morphism checks for a map");
    sub->add_option("--map", map_path, "map file, lines 'x -> y'")->required();
    sub->add_option("--from", from_path, "domain space file")->required();
    sub->add_option("--to", to_path, "codomain space file")->required();
    add_format(sub);
    sub->callback([&] {
      action = [&] {
        exit_code =
            cmd_contraction(map_path, from_path, to_path, format, out, err);
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("frame", "pointfree checks on V^X");
    sub->add_option("file", path, "space file")->required();
    sub->add_option("--check", which, "vcap, vprap, vap or closed")
        ->required()
        ->check(CLI::IsMember({"vcap", "vprap", "vap", "closed"}));
    add_format(sub);
    sub->callback([&] {
      action = [&] { exit_code = cmd_frame(path, which, format, out, err); };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("gen", "deterministic random space");
    sub->add_option("--seed", seed, "rng seed")->required();
    sub->add_option("--points", points, "carrier size, 1..6");
    sub->add_option("--chain", chain, "chain length, 1..8");
    sub->add_option("--flavor", flavor, "raw, prap or ap")
        ->check(CLI::IsMember({"raw", "prap", "ap"}));
    add_style(sub);
    sub->callback([&] {
      action = [&] {
        exit_code = cmd_gen(seed, points, chain, flavor, style, out, err);
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (action) action();
  return exit_code;
}

}  // namespace apxconv
