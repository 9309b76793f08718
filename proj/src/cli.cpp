#include "orebc/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "orebc/annihilator.hpp"
#include "orebc/centralizer.hpp"
#include "orebc/config.hpp"
#include "orebc/expr.hpp"
#include "orebc/json_io.hpp"

namespace orebc {

namespace {

struct GlobalOptions {
  std::optional<std::string> config_path;
  std::optional<std::string> preset;
  std::optional<std::string> q;
  std::optional<std::string> sigma;
  std::optional<std::string> delta;
  std::optional<std::string> field;
  std::optional<std::string> coeff_ring;
  bool json = false;
};

AlgebraPtr algebra_from(const GlobalOptions& g) {
  AlgebraConfig cfg = g.config_path ? load_config(*g.config_path) : AlgebraConfig{};
  if (g.field) cfg.field = *g.field;
  if (g.coeff_ring) cfg.coeff_ring = *g.coeff_ring;
  if (g.q) cfg.q = g.q;
  if (g.sigma) cfg.sigma = g.sigma;
  if (g.delta) cfg.delta = g.delta;
  if (g.preset) cfg.preset = g.preset;
  return build_algebra(cfg);
}

void print_elem(std::ostream& out, const OreElem& e, bool json) {
  if (json)
    out << to_json(e).dump() << '\n';
  else
    out << e.to_string() << '\n';
}

std::string bounds_text(const SearchBounds& b) {
  return "s≤" + std::to_string(b.max_s) + " t≤" + std::to_string(b.max_t) + " y≤" +
         std::to_string(b.max_y);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in Ore extensions R[x; sigma, delta]", "orebc"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config_path, "Algebra configuration file (key = value lines)");
  app.add_option("--preset", g.preset, "weyl | qweyl | power, optionally with arguments: qweyl(2), power(y^2, 1)");
  app.add_option("--q", g.q, "q for the qweyl preset");
  app.add_option("--sigma", g.sigma, "sigma(y) = p(y)");
  app.add_option("--delta", g.delta, "delta(y)");
  app.add_option("--field", g.field, "Q, GF(p) or Fp");
  app.add_option("--coeff-ring", g.coeff_ring, "poly | ratfunc");
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string a_src, b_src, f_src;
  std::function<void()> action;

  auto binary = [&](const std::string& name, const std::string& help, OreElem (*op)(const OreElem&, const OreElem&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("A", a_src)->required();
    sub->add_option("B", b_src)->required();
    sub->callback([&, op] {
      action = [&, op] {
        AlgebraPtr alg = algebra_from(g);
        print_elem(out, op(eval_expr(a_src, alg), eval_expr(b_src, alg)), g.json);
      };
    });
  };
  binary("mul", "Product A*B", &ore_mul);
  binary("add", "Sum A+B", &ore_add);
  binary("commutator", "AB - BA", &commutator);

  auto* central = app.add_subcommand("central", "Is P in the center?");
  central->add_option("P", a_src)->required();
  central->callback([&] {
    action = [&] {
      AlgebraPtr alg = algebra_from(g);
      out << (is_central(eval_expr(a_src, alg)) ? "true" : "false") << '\n';
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Does f(P, Q) vanish?");
  verify_cmd->add_option("F", f_src, "Polynomial in s, t (and y)")->required();
  verify_cmd->add_option("P", a_src)->required();
  verify_cmd->add_option("Q", b_src)->required();
  verify_cmd->callback([&] {
    action = [&] {
      AlgebraPtr alg = algebra_from(g);
      BivarPoly f = eval_bivar_expr(f_src, alg->field());
      out << (verify(f, eval_expr(a_src, alg), eval_expr(b_src, alg)) ? "true" : "false") << '\n';
    };
  });

  std::size_t deg_x = 0;
  std::optional<std::size_t> deg_y;
  bool want_module = false;
  auto* centralizer = app.add_subcommand("centralizer", "Truncated centralizer of A");
  centralizer->add_option("A", a_src)->required();
  centralizer->add_option("--deg-x", deg_x, "Bound on the x-degree")->required();
  centralizer->add_option("--deg-y", deg_y, "Bound on the y-degree of coefficients");
  centralizer->add_flag("--module-basis", want_module, "Report residue-class representatives and rank");
  centralizer->callback([&] {
    action = [&] {
      AlgebraPtr alg = algebra_from(g);
      OreElem a = eval_expr(a_src, alg);
      std::size_t by = deg_y ? *deg_y : default_y_bound(a, deg_x);
      if (!want_module) {
        auto basis = centralizer_kbasis(a, deg_x, by);
        if (g.json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& e : basis) arr.push_back(to_json(e));
          out << nlohmann::json{{"deg_x", deg_x}, {"deg_y", by}, {"k_basis", arr}}.dump() << '\n';
        } else {
          for (const auto& e : basis) out << e.to_string() << '\n';
        }
        return;
      }
      CentralizerBasis mb = module_basis(a, deg_x, by);
      if (g.json) {
        nlohmann::json classes = nlohmann::json::object();
        for (const auto& [i, p] : mb.residue_classes) classes[std::to_string(i)] = to_json(p);
        out << nlohmann::json{{"deg_x", deg_x}, {"deg_y", by}, {"rank", mb.rank()},
                              {"deg_a", a.degree().value()}, {"residue_classes", classes}}
                   .dump()
            << '\n';
      } else {
        for (const auto& [i, p] : mb.residue_classes) out << "p_" << i << " = " << p.to_string() << '\n';
        out << "rank = " << mb.rank() << " (deg a = " << a.degree().value() << ")\n";
      }
    };
  });

  std::string coeffs = "scalars";
  std::optional<std::size_t> max_s, max_t, max_y;
  auto* annihilate_cmd = app.add_subcommand("annihilate", "Search for f(s, t) with f(P, Q) = 0");
  annihilate_cmd->add_option("P", a_src)->required();
  annihilate_cmd->add_option("Q", b_src)->required();
  annihilate_cmd->add_option("--coeffs", coeffs, "scalars | poly")->check(CLI::IsMember({"scalars", "poly"}));
  annihilate_cmd->add_option("--max-s", max_s);
  annihilate_cmd->add_option("--max-t", max_t);
  annihilate_cmd->add_option("--max-y", max_y);
  annihilate_cmd->callback([&] {
    action = [&] {
      AlgebraPtr alg = algebra_from(g);
      OreElem p = eval_expr(a_src, alg);
      OreElem q = eval_expr(b_src, alg);
      CoeffMode mode = coeffs == "poly" ? CoeffMode::poly_coeffs : CoeffMode::scalars;
      std::optional<BivarPoly> f;
      SearchBounds last;
      if (!max_s && !max_t && !max_y) {
        ScheduledSearch run = annihilate_scheduled(p, q, mode);
        f = std::move(run.result);
        last = run.visited.back();
      } else {
        auto deg = [](const OreElem& e) { return static_cast<std::size_t>(std::max<std::int64_t>(e.degree().value(), 1)); };
        last.max_s = max_s.value_or(deg(q));
        last.max_t = max_t.value_or(deg(p));
        last.max_y = mode == CoeffMode::scalars ? 0 : max_y.value_or(std::max(p.y_degree(), q.y_degree()));
        f = annihilate(p, q, mode, last);
      }
      if (g.json) {
        nlohmann::json j{{"found", f.has_value()},
                         {"bounds", {{"s", last.max_s}, {"t", last.max_t}, {"y", last.max_y}}}};
        if (f) j["annihilator"] = to_json(*f);
        out << j.dump() << '\n';
      } else if (f) {
        out << f->to_string() << '\n';
      } else {
        out << "NOT FOUND (bounds " << bounds_text(last) << ")\n";
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return e.is_syntax() || e.code() == Errc::config_error ? 2 : 1;
  }
}

}  // namespace orebc
