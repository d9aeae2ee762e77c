#include "rsc/identities.hpp"

#include <algorithm>
#include <cmath>

#include "rsc/error.hpp"
#include "rsc/parse.hpp"
#include "rsc/roots.hpp"
#include "rsc/transform.hpp"

namespace rsc {

using nlohmann::json;

RootLabel RootLabel::named(std::string name) {
  RootLabel r;
  r.kind = Kind::Symbol;
  r.symbol = std::move(name);
  return r;
}

RootLabel RootLabel::of(FieldElement value) {
  RootLabel r;
  r.kind = Kind::Exact;
  r.exact = std::move(value);
  return r;
}

RootLabel RootLabel::two_cos(Rational angle) {
  RootLabel r;
  r.kind = Kind::TwoCos;
  r.angle = std::move(angle);
  return r;
}

BigComplex RootLabel::value(const PrecisionContext& ctx) const {
  switch (kind) {
    case Kind::Exact:
      return embed_complex(exact, ctx);
    case Kind::TwoCos:
      return BigComplex(BigReal(2, ctx.bits()) * cos_pi(angle, ctx.bits()));
    case Kind::Symbol:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "a symbolic root label has no value of its own");
}

std::string RootLabel::to_string() const {
  switch (kind) {
    case Kind::Exact:
      return exact.to_string();
    case Kind::TwoCos:
      return TrigExpr::cos_pi(angle, FieldElement(2)).to_string();
    case Kind::Symbol:
      break;
  }
  return symbol;
}

std::array<BigComplex, 3> IdentityRecord::lhs_values() const {
  return {a - c * root_values[0], a - c * root_values[1], a - c * root_values[2]};
}

BigComplex IdentityRecord::rhs_radicand_value() const {
  const long bits = precision_bits;
  BigComplex inner = (BigComplex(27, bits) + B * B) / 4;
  BigComplex w = cube_roots(inner)[static_cast<std::size_t>(branches.rhs_inner)];
  return (B - BigComplex(9, bits)) / 2 + w * 3;
}

BigComplex IdentityRecord::lhs_sum() const {
  const auto x = lhs_values();
  BigComplex sum(0, precision_bits);
  for (std::size_t i = 0; i < 3; ++i) sum += cube_roots(x[i])[static_cast<std::size_t>(branches.lhs[i])];
  return sum;
}

BigComplex IdentityRecord::rhs_value() const {
  return cube_roots(rhs_radicand_value())[static_cast<std::size_t>(branches.rhs_outer)];
}

namespace {

BigReal relative_residual(const BigComplex& lhs, const BigComplex& rhs) {
  BigReal scale = abs(lhs);
  BigReal one(1, lhs.precision());
  if (scale < one) scale = one;
  return abs(lhs - rhs) / scale;
}

// Index of the real cube root; a stray imaginary residue of either sign can
// move it between branches 1 and 2, so pick by size rather than sign.
int real_branch(const std::array<BigComplex, 3>& roots) {
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(roots[static_cast<std::size_t>(i)].imag()) < abs(roots[static_cast<std::size_t>(best)].imag())) best = i;
  return best;
}

// Fills branches, all_real and residual_log2 from the numeric data.
void choose_branches(IdentityRecord& rec, const PrecisionContext& ctx) {
  const auto x = rec.lhs_values();
  std::array<std::array<BigComplex, 3>, 3> lhs_roots{cube_roots(x[0]), cube_roots(x[1]), cube_roots(x[2])};
  const auto inner_roots = cube_roots((BigComplex(27, ctx.bits()) + rec.B * rec.B) / 4);
  auto rhs_for = [&](int inner) {
    return (rec.B - BigComplex(9, ctx.bits())) / 2 + inner_roots[static_cast<std::size_t>(inner)] * 3;
  };
  auto accept = [&](const BranchChoice& choice, const BigComplex& sum, const BigComplex& rhs, bool real) {
    BigReal r = relative_residual(sum, rhs);
    if (!(r < ctx.tolerance())) return false;
    rec.branches = choice;
    rec.all_real = real;
    rec.residual_log2 = r.is_zero() ? -static_cast<double>(ctx.bits()) : r.log2_abs();
    return true;
  };

  bool real = ctx.negligible(rec.B.imag());
  for (const auto& v : x) real = real && ctx.negligible(v.imag());
  if (real) {
    BranchChoice choice;
    BigComplex sum(ctx.bits());
    for (std::size_t i = 0; i < 3; ++i) {
      choice.lhs[i] = real_branch(lhs_roots[i]);
      sum += lhs_roots[i][static_cast<std::size_t>(choice.lhs[i])];
    }
    const auto outer_roots = cube_roots(rhs_for(0));
    choice.rhs_outer = real_branch(outer_roots);
    if (accept(choice, sum, outer_roots[static_cast<std::size_t>(choice.rhs_outer)], true)) return;
  }

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int inner = 0; inner < 3; ++inner) {
          BigComplex sum = lhs_roots[0][static_cast<std::size_t>(i)] + lhs_roots[1][static_cast<std::size_t>(j)] +
                           lhs_roots[2][static_cast<std::size_t>(k)];
          const auto outer_roots = cube_roots(rhs_for(inner));
          for (int outer = 0; outer < 3; ++outer)
            if (accept({{i, j, k}, inner, outer}, sum, outer_roots[static_cast<std::size_t>(outer)], false)) return;
        }
  throw Error(ErrorCode::NoBranchFound, "no cube-root branches satisfy the identity");
}

void check_distinct(const std::array<BigComplex, 3>& v, const PrecisionContext& ctx) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (ctx.negligible(v[i] - v[j])) throw Error(ErrorCode::InvalidArgument, "root labels repeat a root");
}

}  // namespace

namespace {

// Roots from the labels (checked against f), exact roots, or t1..t3.
void assign_roots(IdentityRecord& rec, const std::optional<std::array<RootLabel, 3>>& labels,
                  const PrecisionContext& ctx) {
  if (labels) {
    rec.roots = *labels;
    const BigReal bound = ctx.tolerance() * BigReal(16, ctx.bits());
    for (std::size_t i = 0; i < 3; ++i) {
      rec.root_values[i] = rec.roots[i].value(ctx);
      if (!(verify_value_is_root(rec.root_values[i], rec.source) < bound))
        throw Error(ErrorCode::InvalidArgument, "label " + rec.roots[i].to_string() + " is not a root");
    }
    check_distinct(rec.root_values, ctx);
    return;
  }
  if (rec.exact_source) {
    if (auto exact = exact_roots(*rec.exact_source, ctx)) {
      for (std::size_t i = 0; i < 3; ++i) {
        rec.roots[i] = RootLabel::of((*exact)[i]);
        rec.root_values[i] = embed_complex((*exact)[i], ctx);
      }
      return;
    }
  }
  auto values = solve_numeric(rec.source, ctx);
  for (std::size_t i = 0; i < 3; ++i) {
    rec.roots[i] = RootLabel::named("t" + std::to_string(i + 1));
    rec.root_values[i] = values[i];
  }
}

void take_shift(IdentityRecord& rec, const ShiftResult<BigComplex>& numeric) {
  const auto* shift = std::get_if<RamanujanShift<BigComplex>>(&numeric);
  if (shift == nullptr) throw Error(ErrorCode::TranslationCase, "c = 0: the cubic is a translation of x^3");
  rec.a = shift->a;
  rec.c = shift->c;
  rec.B = shift->B;
}

}  // namespace

IdentityRecord build_identity(const ExactCubic& f, const PrecisionContext& ctx,
                              const std::optional<std::array<RootLabel, 3>>& labels) {
  AnyShift any = classify_and_shift(f, ctx);
  IdentityRecord rec;
  rec.precision_bits = ctx.bits();
  rec.exact_source = f;
  rec.source = to_numeric(f, ctx);
  if (!is_numeric(any)) {
    const auto& exact = std::get<ShiftResult<FieldElement>>(any);
    const auto* shift = std::get_if<RamanujanShift<FieldElement>>(&exact);
    if (shift == nullptr) throw Error(ErrorCode::TranslationCase, "c = 0: the cubic is a translation of x^3");
    rec.exact_a = shift->a;
    rec.exact_c = shift->c;
    rec.exact_B = shift->B;
    rec.a = embed_complex(shift->a, ctx);
    rec.c = embed_complex(shift->c, ctx);
    rec.B = embed_complex(shift->B, ctx);
  } else {
    take_shift(rec, std::get<ShiftResult<BigComplex>>(any));
  }
  assign_roots(rec, labels, ctx);
  choose_branches(rec, ctx);
  return rec;
}

IdentityRecord build_identity(const NumericCubic& f, const PrecisionContext& ctx,
                              const std::optional<std::array<RootLabel, 3>>& labels) {
  IdentityRecord rec;
  rec.precision_bits = ctx.bits();
  rec.source = f;
  take_shift(rec, classify_and_shift(f, ctx));
  assign_roots(rec, labels, ctx);
  choose_branches(rec, ctx);
  return rec;
}

BigReal verify_value_is_root(const BigComplex& v, const NumericCubic& f) {
  BigReal scale = coefficient_norm(f);
  return abs(f.eval(v)) / scale;
}

BigReal verify_value_is_root(const BigComplex& v, const ExactCubic& f, const PrecisionContext& ctx) {
  return verify_value_is_root(v, to_numeric(f, ctx));
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Piece {
  bool negate;       // shown as "- cbrt(...)"
  std::string body;  // radicand text
};

std::string short_number(const BigComplex& z, long bits) {
  const BigReal tiny = pow2(-bits / 2, bits);
  BigReal scale = abs(z);
  if (scale < BigReal(1, bits)) scale = BigReal(1, bits);
  if (abs(z.imag()) < tiny * scale) return z.real().to_string(20);
  std::string im = abs(z.imag()).to_string(20);
  return z.real().to_string(20) + (z.imag().sign() < 0 ? " - " : " + ") + im + "i";
}

bool is_plain(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

std::string cbrt_text(const std::string& body) { return (is_plain(body) ? body : "(" + body + ")") + "^(1/3)"; }
std::string cbrt_latex(const std::string& body) { return "\\sqrt[3]{" + body + "}"; }

// alpha + beta t in the label's own vocabulary
std::string linear_text(const FieldElement& alpha, const FieldElement& beta, const RootLabel& root, bool latex) {
  switch (root.kind) {
    case RootLabel::Kind::Exact: {
      FieldElement v = alpha + beta * root.exact;
      return latex ? v.to_latex() : v.to_string();
    }
    case RootLabel::Kind::TwoCos: {
      // a lone cosine is folded into [0, pi/2]; next to a constant the label's angle is kept
      if (alpha.is_zero()) {
        TrigExpr e = TrigExpr::cos_pi(root.angle, beta * FieldElement(2));
        return latex ? e.to_latex() : e.to_string();
      }
      std::string head = latex ? alpha.to_latex() : alpha.to_string();
      return head + TrigExpr::term_text(root.angle, beta * FieldElement(2), false, latex);
    }
    case RootLabel::Kind::Symbol:
      break;
  }
  std::string out = alpha.is_zero() ? "" : (latex ? alpha.to_latex() : alpha.to_string());
  if (beta.is_zero()) return out.empty() ? "0" : out;
  FieldElement b = beta;
  bool neg = b.terms().size() == 1 && b.terms()[0].coeff.sign() < 0;
  if (neg) b = -b;
  std::string coeff = b == FieldElement(1) ? "" : (latex ? b.to_latex() : b.to_string());
  if (!coeff.empty() && b.terms().size() > 1) coeff = "(" + coeff + ")";
  if (!coeff.empty()) coeff += latex ? " " : "*";
  std::string sym = root.symbol;
  if (latex && sym.size() > 1 && sym[0] == 't') sym = "t_{" + sym.substr(1) + "}";
  if (out.empty()) return (neg ? "-" : "") + coeff + sym;
  return out + (neg ? " - " : " + ") + coeff + sym;
}

// s^3 * r = x with r a cube-free positive integer, x a positive rational.
std::pair<Rational, mpz_class> cube_split(const Rational& x) {
  mpz_class d = x.den();
  mpz_class m = x.num() * d * d;  // x = m / d^3
  mpz_class outside = 1, inside = 1;
  for (const auto& [p, e] : factorize(m)) {
    for (unsigned i = 0; i < e / 3; ++i) outside *= p;
    for (unsigned i = 0; i < e % 3; ++i) inside *= p;
  }
  return {Rational(outside, d), inside};
}

// base + coeff * cbrt(inner), simplified when the cube root is of a positive rational.
std::string rhs_exact_text(const FieldElement& base, const FieldElement& coeff, const FieldElement& inner,
                           bool principal_inner, bool latex) {
  auto str = [&](const FieldElement& x) { return latex ? x.to_latex() : x.to_string(); };
  auto join = [&](std::string head, FieldElement k, const std::string& root) {
    bool neg = k.terms().size() == 1 && k.terms()[0].coeff.sign() < 0;
    if (neg) k = -k;
    std::string ks = k == FieldElement(1) ? "" : str(k);
    if (k.terms().size() > 1) ks = "(" + ks + ")";
    if (!ks.empty()) ks += latex ? " " : "*";
    if (head.empty()) return (neg ? "-" : "") + ks + root;
    return head + (neg ? " - " : " + ") + ks + root;
  };
  const std::string head = base.is_zero() ? "" : str(base);
  if (principal_inner && coeff.is_rational() && inner.is_rational() && inner.as_rational().sign() > 0) {
    Rational k = coeff.as_rational();
    Rational k3 = k * k * k;
    if (k3.sign() < 0) k3 = -k3;
    auto [s, r] = cube_split(k3 * inner.as_rational());
    if (k.sign() < 0) s = -s;
    if (r == 1) return str(base + FieldElement(s));
    std::string rs = r.get_str();
    return join(head, FieldElement(s), latex ? cbrt_latex(rs) : cbrt_text(rs));
  }
  return join(head, coeff, latex ? cbrt_latex(str(inner)) : cbrt_text(str(inner)));
}

struct Rendered {
  std::array<Piece, 3> lhs;
  Piece rhs;
  std::array<std::string, 3> plain_lhs;  // scaled radicands without sign pulling
  std::string plain_rhs;
};

Rendered render_parts(const IdentityRecord& rec, const FieldElement& scale, bool latex) {
  const long bits = rec.precision_bits;
  const PrecisionContext ctx(bits);
  Rendered out;
  const BigComplex mu = embed_complex(scale, ctx);
  const bool sign_pull = rec.all_real && scale.is_real();
  const bool exact_lhs = rec.exact_a && rec.exact_c;
  const auto values = rec.lhs_values();
  for (std::size_t i = 0; i < 3; ++i) {
    const BigComplex scaled = values[i] * mu;
    bool neg = sign_pull && scaled.real().sign() < 0;
    std::string plain, shown;
    if (exact_lhs) {
      const FieldElement alpha = *rec.exact_a * scale, beta = -(*rec.exact_c) * scale;
      plain = linear_text(alpha, beta, rec.roots[i], latex);
      // real cube roots are odd; pull the sign out only when that removes a leading minus
      neg = neg && plain[0] == '-';
      shown = neg ? linear_text(-alpha, -beta, rec.roots[i], latex) : plain;
    } else {
      plain = short_number(scaled, bits);
      shown = neg ? short_number(-scaled, bits) : plain;
    }
    out.plain_lhs[i] = plain;
    out.lhs[i] = {neg, shown};
  }

  const BigComplex w = rec.rhs_radicand_value() * mu;
  bool neg = sign_pull && w.real().sign() < 0;
  if (rec.exact_B) {
    const FieldElement B = *rec.exact_B;
    const FieldElement base = (B - FieldElement(9)) * FieldElement(Rational(1, 2)) * scale;
    const FieldElement coeff = FieldElement(3) * scale;
    const FieldElement inner = (FieldElement(27) + B * B) * FieldElement(Rational(1, 4));
    const bool principal = rec.branches.rhs_inner == 0;
    out.plain_rhs = rhs_exact_text(base, coeff, inner, principal, latex);
    neg = neg && out.plain_rhs[0] == '-';
    out.rhs = {neg, neg ? rhs_exact_text(-base, -coeff, inner, principal, latex) : out.plain_rhs};
  } else {
    out.plain_rhs = short_number(w, bits);
    out.rhs = {neg, neg ? short_number(-w, bits) : out.plain_rhs};
  }
  return out;
}

std::string branch_note(const BranchChoice& b) {
  return "lhs=(" + std::to_string(b.lhs[0]) + "," + std::to_string(b.lhs[1]) + "," + std::to_string(b.lhs[2]) +
         ") inner=" + std::to_string(b.rhs_inner) + " outer=" + std::to_string(b.rhs_outer);
}

// Positive summands first, otherwise in root order.
std::array<std::size_t, 3> display_order(const Rendered& r) {
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return !r.lhs[i].negate; });
  return order;
}

std::string render_text(const IdentityRecord& rec, const FieldElement& scale) {
  Rendered r = render_parts(rec, scale, false);
  std::string out;
  bool first = true;
  for (std::size_t i : display_order(r)) {
    if (first) out += r.lhs[i].negate ? "-" : "";
    else out += r.lhs[i].negate ? " - " : " + ";
    first = false;
    out += cbrt_text(r.lhs[i].body);
  }
  out += " = ";
  out += (r.rhs.negate ? "-" : "") + cbrt_text(r.rhs.body);
  if (!rec.all_real) out += "  [branches " + branch_note(rec.branches) + "]";
  return out;
}

std::string render_latex(const IdentityRecord& rec, const FieldElement& scale) {
  Rendered r = render_parts(rec, scale, true);
  std::string out;
  bool first = true;
  for (std::size_t i : display_order(r)) {
    if (first) out += r.lhs[i].negate ? "-" : "";
    else out += r.lhs[i].negate ? " - " : " + ";
    first = false;
    out += cbrt_latex(r.lhs[i].body);
  }
  out += " = ";
  out += (r.rhs.negate ? "-" : "") + cbrt_latex(r.rhs.body);
  if (!rec.all_real) out += " \\quad \\text{(branches " + branch_note(rec.branches) + ")}";
  return out;
}

json complex_json(const BigComplex& z) { return {{"re", z.real().to_string()}, {"im", z.imag().to_string()}}; }

BigComplex complex_from(const json& j, long bits) {
  return {BigReal::parse(j.at("re").get<std::string>(), bits), BigReal::parse(j.at("im").get<std::string>(), bits)};
}

std::string scalar_text(const std::optional<FieldElement>& exact, const BigComplex& numeric, long bits) {
  return exact ? exact->to_string() : short_number(numeric, bits);
}

}  // namespace

std::optional<std::string> lhs_term_text(const IdentityRecord& rec, int i, const FieldElement& scale) {
  if (!rec.exact_a || !rec.exact_c) return std::nullopt;
  return linear_text(*rec.exact_a * scale, -(*rec.exact_c) * scale, rec.roots[static_cast<std::size_t>(i)], false);
}

std::string render(const IdentityRecord& rec, Format format, const RenderOptions& options) {
  switch (format) {
    case Format::Text:
      return render_text(rec, options.scale);
    case Format::Latex:
      return render_latex(rec, options.scale);
    case Format::Json:
      break;
  }
  return to_json(rec).dump(2);
}

json to_json(const IdentityRecord& rec) {
  const long bits = rec.precision_bits;
  json j;
  j["schema"] = IdentityRecord::kSchema;
  j["precision_bits"] = bits;
  j["source_exact"] = rec.exact_source.has_value();
  if (rec.exact_source) {
    j["source"] = {{"P", rec.exact_source->P.to_string()},
                   {"Q", rec.exact_source->Q.to_string()},
                   {"R", rec.exact_source->R.to_string()}};
  } else {
    j["source"] = {{"P", short_number(rec.source.P, bits)},
                   {"Q", short_number(rec.source.Q, bits)},
                   {"R", short_number(rec.source.R, bits)}};
  }
  j["B"] = scalar_text(rec.exact_B, rec.B, bits);
  j["a"] = scalar_text(rec.exact_a, rec.a, bits);
  j["c"] = scalar_text(rec.exact_c, rec.c, bits);
  j["exact"] = {{"B", rec.exact_B.has_value()}, {"a", rec.exact_a.has_value()}, {"c", rec.exact_c.has_value()}};

  json roots = json::array();
  for (const auto& r : rec.roots) {
    switch (r.kind) {
      case RootLabel::Kind::Symbol:
        roots.push_back({{"kind", "symbol"}, {"name", r.symbol}});
        break;
      case RootLabel::Kind::Exact:
        roots.push_back({{"kind", "exact"}, {"value", r.exact.to_string()}});
        break;
      case RootLabel::Kind::TwoCos:
        roots.push_back({{"kind", "two_cos"}, {"angle", r.angle.to_string()}});
        break;
    }
  }
  j["roots"] = roots;

  Rendered text = render_parts(rec, FieldElement(1), false);
  j["lhs_terms"] = text.plain_lhs;
  j["rhs_radicand"] = text.plain_rhs;
  if (rec.exact_B) {
    const FieldElement& B = *rec.exact_B;
    j["rhs_parts"] = {{"base", ((B - FieldElement(9)) * FieldElement(Rational(1, 2))).to_string()},
                      {"factor", "3"},
                      {"inner", ((FieldElement(27) + B * B) * FieldElement(Rational(1, 4))).to_string()}};
  } else {
    j["rhs_parts"] = {{"base", short_number((rec.B - BigComplex(9, bits)) / 2, bits)},
                      {"factor", "3"},
                      {"inner", short_number((BigComplex(27, bits) + rec.B * rec.B) / 4, bits)}};
  }
  j["branches"] = {{"lhs", rec.branches.lhs}, {"rhs_inner", rec.branches.rhs_inner},
                   {"rhs_outer", rec.branches.rhs_outer}};
  j["all_real"] = rec.all_real;
  j["residual_log2"] = rec.residual_log2;

  json root_values = json::array();
  for (const auto& v : rec.root_values) root_values.push_back(complex_json(v));
  j["values"] = {{"source", {complex_json(rec.source.P), complex_json(rec.source.Q), complex_json(rec.source.R)}},
                 {"a", complex_json(rec.a)},
                 {"c", complex_json(rec.c)},
                 {"B", complex_json(rec.B)},
                 {"roots", root_values}};
  return j;
}

IdentityRecord identity_from_json(const json& j) {
  try {
    if (j.at("schema").get<int>() != IdentityRecord::kSchema) throw ParseError(0, "unsupported identity schema");
    IdentityRecord rec;
    rec.precision_bits = j.at("precision_bits").get<long>();
    const long bits = rec.precision_bits;
    const json& values = j.at("values");
    const json& src = values.at("source");
    rec.source = {complex_from(src.at(0), bits), complex_from(src.at(1), bits), complex_from(src.at(2), bits)};
    if (j.at("source_exact").get<bool>()) {
      const json& s = j.at("source");
      rec.exact_source = ExactCubic{parse_coeff(s.at("P").get<std::string>()), parse_coeff(s.at("Q").get<std::string>()),
                                    parse_coeff(s.at("R").get<std::string>())};
    }
    const json& exact = j.at("exact");
    auto read_exact = [&](const char* key) -> std::optional<FieldElement> {
      if (!exact.at(key).get<bool>()) return std::nullopt;
      return parse_coeff(j.at(key).get<std::string>());
    };
    rec.exact_a = read_exact("a");
    rec.exact_c = read_exact("c");
    rec.exact_B = read_exact("B");
    rec.a = complex_from(values.at("a"), bits);
    rec.c = complex_from(values.at("c"), bits);
    rec.B = complex_from(values.at("B"), bits);
    for (std::size_t i = 0; i < 3; ++i) {
      const json& r = j.at("roots").at(i);
      const std::string kind = r.at("kind").get<std::string>();
      if (kind == "symbol") rec.roots[i] = RootLabel::named(r.at("name").get<std::string>());
      else if (kind == "exact") rec.roots[i] = RootLabel::of(parse_coeff(r.at("value").get<std::string>()));
      else if (kind == "two_cos") rec.roots[i] = RootLabel::two_cos(Rational::parse(r.at("angle").get<std::string>()));
      else throw ParseError(0, "unknown root kind " + kind);
      rec.root_values[i] = complex_from(values.at("roots").at(i), bits);
    }
    const json& b = j.at("branches");
    rec.branches.lhs = b.at("lhs").get<std::array<int, 3>>();
    rec.branches.rhs_inner = b.at("rhs_inner").get<int>();
    rec.branches.rhs_outer = b.at("rhs_outer").get<int>();
    rec.all_real = j.at("all_real").get<bool>();
    rec.residual_log2 = j.at("residual_log2").get<double>();
    return rec;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("identity JSON: ") + e.what());
  }
}

std::vector<CosineRelation> mobius_cosine_relations(const IdentityRecord& rec, const PrecisionContext& ctx) {
  if (!rec.exact_a || !rec.exact_c) throw Error(ErrorCode::InvalidArgument, "cosine relations need an exact shift");
  std::array<TrigExpr, 3> x;
  for (std::size_t i = 0; i < 3; ++i) {
    if (rec.roots[i].kind != RootLabel::Kind::TwoCos)
      throw Error(ErrorCode::InvalidArgument, "cosine relations need roots of the form 2cos(q pi)");
    x[i] = TrigExpr(*rec.exact_a) + TrigExpr::cos_pi(rec.roots[i].angle, -(*rec.exact_c) * FieldElement(2));
  }
  const auto values = rec.lhs_values();
  Permutation perm = permutation_under(MobiusMap<BigComplex>::rsc_cycle(ctx), values, ctx);
  std::vector<CosineRelation> out;
  for (int i = 0; i < 3; ++i) {
    const int j = perm.sigma[static_cast<std::size_t>(i)];
    TrigExpr rel = x[static_cast<std::size_t>(j)] * (TrigExpr(FieldElement(1)) - x[static_cast<std::size_t>(i)]) -
                   TrigExpr(FieldElement(1));
    out.push_back({i, j, std::move(rel)});
  }
  return out;
}

}  // namespace rsc
