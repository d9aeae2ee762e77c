#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "rsc/cos_lattice.hpp"
#include "rsc/fixtures.hpp"
#include "rsc/identities.hpp"
#include "rsc/parse.hpp"
#include "rsc/roots.hpp"
#include "rsc/transform.hpp"

namespace rsc::cli {

namespace {

using nlohmann::json;

struct Settings {
  long bits = 256;
  std::string format;  // empty: the subcommand's default
  std::string height = "1000000";
  bool near_miss = false;
  std::string cubic;
  std::string scale = "1";
  long n = 0, k = 1, from = 0, to = 0;
};

Format format_of(const std::string& name, Format fallback) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  return fallback;
}

json value_json(const BigComplex& z) { return {{"re", z.real().to_string()}, {"im", z.imag().to_string()}}; }
json value_json(const FieldElement& v) { return v.to_string(); }

std::string latex_of(const FieldElement& v) { return v.to_latex(); }
std::string latex_of(const BigComplex& z) { return z.to_string(); }
std::string latex_of(const ExactCubic& f) { return to_latex(f); }
std::string latex_of(const NumericCubic& f) { return to_string(f); }

template <class S>
void emit_shift(const ShiftResult<S>& shift, bool exact, Format fmt, std::ostream& out) {
  if (const auto* t = std::get_if<Translation<S>>(&shift)) {
    if (fmt == Format::Json) {
      json j{{"kind", "translation"}, {"exact", exact}, {"h", value_json(t->h)}, {"k", value_json(t->k)}};
      out << j.dump(2) << "\n";
    } else if (fmt == Format::Latex) {
      out << "f(x) = (x - " << latex_of(t->h) << ")^3 + " << latex_of(t->k) << "\n";
    } else {
      out << "translation f(x) = (x - h)^3 + k\nh = " << t->h.to_string() << "\nk = " << t->k.to_string() << "\n";
    }
    return;
  }
  const auto& r = std::get<RamanujanShift<S>>(shift);
  if (fmt == Format::Json) {
    json j{{"kind", "rsc"},
           {"exact", exact},
           {"a", value_json(r.a)},
           {"c", value_json(r.c)},
           {"B", value_json(r.B)},
           {"rsc", to_string(r.rsc)},
           {"sqrt_delta", value_json(r.serret.sqrt_delta)}};
    out << j.dump(2) << "\n";
  } else if (fmt == Format::Latex) {
    out << "a = " << latex_of(r.a) << ",\\quad c = " << latex_of(r.c) << ",\\quad B = " << latex_of(r.B)
        << ",\\quad p_B(x) = " << latex_of(r.rsc) << "\n";
  } else {
    out << "a = " << r.a.to_string() << "\nc = " << r.c.to_string() << "\nB = " << r.B.to_string()
        << "\np_B(x) = " << to_string(r.rsc) << "\n";
  }
}

int cmd_transform(const Settings& s, const PrecisionContext& ctx, std::ostream& out) {
  const ExactCubic f = parse_cubic(s.cubic);
  const AnyShift shift = classify_and_shift(f, ctx);
  const Format fmt = format_of(s.format, Format::Json);
  if (is_numeric(shift))
    emit_shift(std::get<ShiftResult<BigComplex>>(shift), false, fmt, out);
  else
    emit_shift(std::get<ShiftResult<FieldElement>>(shift), true, fmt, out);
  return 0;
}

int cmd_identity(const Settings& s, const PrecisionContext& ctx, std::ostream& out) {
  const IdentityRecord rec = build_identity(parse_cubic(s.cubic), ctx);
  const Format fmt = format_of(s.format, Format::Text);
  out << render(rec, fmt, RenderOptions{parse_coeff(s.scale)}) << "\n";
  return 0;
}

int cmd_roots(const Settings& s, const PrecisionContext& ctx, std::ostream& out) {
  const ExactCubic f = parse_cubic(s.cubic);
  const Format fmt = format_of(s.format, Format::Text);
  const auto exact = exact_roots(f, ctx);
  std::optional<std::array<TrigRoot, 3>> trig;
  try {
    trig = cubic_trig_roots(f, ctx);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonRealShift && e.code() != ErrorCode::TranslationCase) throw;
  }
  const auto numeric = solve_numeric(f, ctx);
  json arr = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json r{{"value", value_json(numeric[i])}};
    if (exact) r["exact"] = (*exact)[i].to_string();
    arr.push_back(r);
  }
  json trig_json = json::array();
  if (trig)
    for (const auto& t : *trig) trig_json.push_back({{"k", t.k}, {"value", t.value.to_string()}, {"angle", t.angle.to_string()}});
  if (fmt == Format::Json) {
    out << json{{"cubic", to_string(f)}, {"roots", arr}, {"trig", trig_json}}.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    out << "t" << i + 1 << " = ";
    if (exact)
      out << (fmt == Format::Latex ? (*exact)[i].to_latex() : (*exact)[i].to_string());
    else if (ctx.negligible(numeric[i].imag()))
      out << numeric[i].real().to_string();
    else
      out << numeric[i].to_string();
    out << "\n";
  }
  if (trig)
    for (const auto& t : *trig) out << "k = " << t.k << ": " << t.value.to_string() << "\n";
  return 0;
}

int cmd_cosmin(const Settings& s, const PrecisionContext& ctx, std::ostream& out) {
  const CosMinPoly p = cos_min_poly(s.n, ctx);
  if (format_of(s.format, Format::Text) == Format::Json) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.get_str());
    out << json{{"n", p.n}, {"degree", p.degree()}, {"coeffs", coeffs}, {"polynomial", p.to_string()}}.dump(2)
        << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return 0;
}

int cmd_factor(const Settings& s, const PrecisionContext& ctx, std::ostream& out, std::ostream& err) {
  const CosMinPoly p = cos_min_poly(s.n, ctx);
  const auto f = quad_cubic_factor(p, s.k, ctx);
  if (!f) {
    err << "no cubic factor over a multi-quadratic field for n = " << s.n << "\n";
    return 1;
  }
  const Format fmt = format_of(s.format, Format::Text);
  if (fmt == Format::Json) {
    out << json{{"n", f->n}, {"target_k", f->target_k}, {"gens", f->gens}, {"cubic", to_string(f->cubic)},
                {"root_k", f->root_k}}
                   .dump(2)
        << "\n";
    return 0;
  }
  out << (fmt == Format::Latex ? to_latex(f->cubic) : to_string(f->cubic)) << "\n";
  out << "field: Q";
  for (auto g : f->gens) out << "(sqrt(" << g << "))";
  out << "\nroots: ";
  for (std::size_t i = 0; i < 3; ++i) out << (i ? ", " : "") << "2cos(2pi*" << f->root_k[i] << "/" << f->n << ")";
  out << "\n";
  return 0;
}

void emit_pipeline_text(const PipelineResult& r, Format fmt, std::ostream& out) {
  out << "n = " << r.n << ", k = " << r.target_k << ": "
      << (r.factor ? to_string(r.factor->cubic) : "numeric cubic " + to_string(r.numeric_cubic)) << "\n";
  out << "B = " << (r.identity.exact_B ? r.identity.exact_B->to_string() : r.identity.B.to_string()) << "\n";
  out << render(r.identity, fmt) << "\n";
  for (const auto& c : r.relations)
    out << "x" << c.to + 1 << " (1 - x" << c.from + 1 << ") - 1 = "
        << (fmt == Format::Latex ? c.relation.to_latex() : c.relation.to_string()) << "\n";
}

int cmd_pipeline(const Settings& s, const PrecisionContext& ctx, std::ostream& out) {
  const PipelineResult r = cos_pipeline(s.n, s.k, ctx, mpz_class(s.height));
  const Format fmt = format_of(s.format, Format::Text);
  if (fmt == Format::Json)
    out << to_json(r).dump(2) << "\n";
  else
    emit_pipeline_text(r, fmt, out);
  return 0;
}

int cmd_mine(const Settings& s, const PrecisionContext& ctx, std::ostream& out) {
  MineOptions opt;
  opt.near_miss = s.near_miss;
  opt.height = mpz_class(s.height);
  const auto entries = mine(s.from, s.to, ctx, opt);
  const Format fmt = format_of(s.format, Format::Text);
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : entries) {
    out << "n = " << e.n << ", k = " << e.target_k << ": ";
    if (!e.result) {
      out << e.error << "\n";
      continue;
    }
    const auto& id = e.result->identity;
    out << "B = " << (id.exact_B ? id.exact_B->to_string() : id.B.to_string()) << "\n  " << render(id, fmt) << "\n";
    for (const auto& m : e.near_misses)
      out << "  near miss: " << m.term << " ~ " << m.rational.to_string() << " (" << m.distance << ")\n";
  }
  return 0;
}

int cmd_verify(const Settings& s, const PrecisionContext& ctx, std::ostream& out) {
  const auto results = reference_fixtures(ctx);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    const double lg = r.residual.is_zero() ? -static_cast<double>(ctx.bits()) : r.residual.log2_abs();
    arr.push_back({{"name", r.name}, {"statement", r.statement}, {"pass", r.pass}, {"residual_log2", lg},
                   {"detail", r.detail}});
  }
  if (format_of(s.format, Format::Text) == Format::Json) {
    out << arr.dump(2) << "\n";
  } else {
    char buf[32];
    for (const auto& j : arr) {
      std::snprintf(buf, sizeof buf, "%.1f", j["residual_log2"].get<double>());
      out << (j["pass"].get<bool>() ? "PASS " : "FAIL ") << j["name"].get<std::string>() << "  residual 2^" << buf
          << "  " << j["statement"].get<std::string>();
      if (!j["detail"].get<std::string>().empty()) out << "  [" << j["detail"].get<std::string>() << "]";
      out << "\n";
    }
    out << (ok ? "all fixtures pass" : "some fixtures FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Ramanujan simple cubics: shifts, roots and cube-root identities", "rsc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", s.bits, "working precision in bits")->check(CLI::Range(64L, 65536L));
  app.add_option("--format", s.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--height", s.height, "recognition height bound")->check([](const std::string& v) {
    mpz_class h;
    return h.set_str(v, 10) == 0 && h > 0 ? std::string() : std::string("height must be a positive integer");
  });
  app.add_flag("--near-miss", s.near_miss, "flag relation terms close to small rationals (mine)");

  auto* transform = app.add_subcommand("transform", "shift a cubic onto a Ramanujan simple cubic or x^3");
  auto* identity = app.add_subcommand("identity", "cube-root identity of a cubic");
  auto* roots = app.add_subcommand("roots", "roots of a cubic");
  for (auto* sub : {transform, identity, roots})
    sub->add_option("--cubic", s.cubic, "monic coefficients \"1,P,Q,R\"")->required();
  identity->add_option("--scale", s.scale, "multiply every radicand by this");

  auto* cosmin = app.add_subcommand("cosmin", "minimal polynomial of 2cos(2pi/n)");
  auto* factor = app.add_subcommand("factor", "cubic factor of the minimal polynomial of 2cos(2pi/n)");
  auto* pipeline = app.add_subcommand("pipeline", "factor, shift and identity for 2cos(2pi k/n)");
  for (auto* sub : {cosmin, factor, pipeline}) sub->add_option("--n", s.n, "n >= 1")->required();
  for (auto* sub : {factor, pipeline}) sub->add_option("--k", s.k, "target k coprime to n");

  auto* mine_cmd = app.add_subcommand("mine", "run the pipeline for every cubic factor with n in a range");
  mine_cmd->add_option("--from", s.from, "first n")->required();
  mine_cmd->add_option("--to", s.to, "last n")->required();

  auto* verify = app.add_subcommand("verify-paper", "re-derive and check the published identities");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    const PrecisionContext ctx(s.bits);
    if (transform->parsed()) return cmd_transform(s, ctx, out);
    if (identity->parsed()) return cmd_identity(s, ctx, out);
    if (roots->parsed()) return cmd_roots(s, ctx, out);
    if (cosmin->parsed()) return cmd_cosmin(s, ctx, out);
    if (factor->parsed()) return cmd_factor(s, ctx, out, err);
    if (pipeline->parsed()) return cmd_pipeline(s, ctx, out);
    if (mine_cmd->parsed()) return cmd_mine(s, ctx, out);
    if (verify->parsed()) return cmd_verify(s, ctx, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rsc::cli
