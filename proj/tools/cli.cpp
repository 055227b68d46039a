#include "cli.hpp"

#include <gmp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "halving/codec.hpp"
#include "halving/complex_check.hpp"
#include "halving/errors.hpp"
#include "halving/finite_halving.hpp"
#include "halving/rational_halving.hpp"

namespace halving::cli {
namespace {

using json = nlohmann::ordered_json;
using QPoint = Point<Rational>;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- formatting

std::string str(const Rational& q) { return q.to_string(); }
std::string str(const FpElem& a) { return a.value().to_string(); }
std::string str(const BigInt& a) { return a.to_string(); }

std::string str(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real();
  if (z.imag() != 0.0) os << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

template <class E>
json point_json(const Point<E>& p) {
  if (p.is_infinity()) return json{{"infinity", true}};
  return json{{"x", str(p.x())}, {"y", str(p.y())}};
}

template <class E>
json points_json(const std::vector<Point<E>>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

bool is_point_object(const json& j) {
  if (!j.is_object()) return false;
  if (j.size() == 1 && j.contains("infinity")) return true;
  return j.size() == 2 && j.contains("x") && j.contains("y");
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (is_point_object(j)) {
    if (j.contains("infinity")) return "O";
    return "(" + j["x"].get<std::string>() + ", " + j["y"].get<std::string>() + ")";
  }
  return j.dump();
}

bool is_leaf(const json& j) { return !j.is_structured() || is_point_object(j); }

// Indented key/value listing used by --pretty.
void render(const json& j, std::ostream& out, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object() && !is_point_object(j)) {
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
      if (is_leaf(v)) {
        out << pad << std::left << std::setw(static_cast<int>(width)) << k << "  "
            << scalar_text(v) << "\n";
      } else if (v.empty()) {
        out << pad << std::left << std::setw(static_cast<int>(width)) << k << "  (none)\n";
      } else {
        out << pad << k << "\n";
        render(v, out, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_leaf(v)) {
        out << pad << "- " << scalar_text(v) << "\n";
      } else {
        out << pad << "-\n";
        render(v, out, depth + 1);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

// ------------------------------------------------------------------- parsing

Rational parse_q(const std::string& s, const char* what) {
  try {
    return Rational::from_string(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + ": not a rational number: '" + s + "'");
  }
}

BigInt parse_z(const std::string& s, const char* what) {
  try {
    return BigInt::from_string(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  }
}

bool names_infinity(const std::string& x) { return x == "inf" || x == "infinity" || x == "O"; }

struct PointArgs {
  std::string x, y;
};

void add_point_options(CLI::App* app, PointArgs& p, const std::string& prefix = "") {
  app->add_option("--" + prefix + "x", p.x, "x coordinate, or 'inf' for the point at infinity")
      ->required();
  app->add_option("--" + prefix + "y", p.y, "y coordinate");
}

template <class Make>
auto parse_point(const PointArgs& a, Make&& make) -> Point<decltype(make(a.x, "x"))> {
  using P = Point<decltype(make(a.x, "x"))>;
  if (names_infinity(a.x)) return P::infinity();
  if (a.y.empty()) throw UsageError("--y is required for an affine point");
  return P(make(a.x, "x"), make(a.y, "y"));
}

QPoint parse_q_point(const PointArgs& a) { return parse_point(a, parse_q); }

PrimeFieldPtr parse_field(const std::string& s) {
  const BigInt p = parse_z(s, "p");
  if (p < BigInt(3)) throw DomainError("p must be an odd prime, got " + p.to_string());
  if (mpz_probab_prime_p(p.raw().get_mpz_t(), 30) == 0) {
    throw DomainError("p is not prime: " + p.to_string());
  }
  return PrimeField::make(p);
}

FpPoint parse_fp_point(const PointArgs& a, const PrimeFieldPtr& f) {
  return parse_point(a, [&](const std::string& s, const char* what) {
    return FpElem(parse_z(s, what), f);
  });
}

struct CurveArgs {
  std::string a2 = "0", a4, a6;
};

void add_curve_options(CLI::App* app, CurveArgs& c) {
  app->add_option("--a2", c.a2, "coefficient of x^2 (default 0)");
  app->add_option("--a4", c.a4, "coefficient of x")->required();
  app->add_option("--a6", c.a6, "constant term")->required();
}

FpCurve parse_fp_curve(const CurveArgs& c, const PrimeFieldPtr& f) {
  FpCurve curve = make_fp_curve(f, parse_z(c.a2, "a2"), parse_z(c.a4, "a4"), parse_z(c.a6, "a6"));
  require_nonsingular(curve);
  return curve;
}

Curve<Rational> parse_q_curve(const CurveArgs& c) {
  Curve<Rational> curve{parse_q(c.a2, "a2"), parse_q(c.a4, "a4"), parse_q(c.a6, "a6")};
  require_nonsingular(curve);
  return curve;
}

struct RootArgs {
  std::string e0, e1, e2;
};

void add_root_options(CLI::App* app, RootArgs& r) {
  app->add_option("--e0", r.e0, "first root of the cubic")->required();
  app->add_option("--e1", r.e1, "second root")->required();
  app->add_option("--e2", r.e2, "third root")->required();
}

SplitCurveQ parse_split(const RootArgs& r) {
  return SplitCurveQ(parse_q(r.e0, "e0"), parse_q(r.e1, "e1"), parse_q(r.e2, "e2"));
}

// ------------------------------------------------------------------ commands

json witness_json(const HalvabilityWitness& w) {
  json j{{"halvable", w.halvable}};
  if (w.roots) {
    j["witness"] = {{"gamma", str(w.roots->gamma)},
                    {"alpha", str(w.roots->alpha)},
                    {"beta", str(w.roots->beta)}};
  } else {
    j["witness"] = nullptr;
  }
  if (w.failing_index) {
    j["failing_index"] = *w.failing_index;
    j["failing_difference"] = str(*w.failing_difference);
  }
  return j;
}

json halve_q(const SplitCurveQ& c, const QPoint& p) {
  const auto w = is_halvable_q(c, p);
  json j{{"curve",
          {{"a2", str(c.curve().a2)}, {"a4", str(c.curve().a4)}, {"a6", str(c.curve().a6)}}},
         {"point", point_json(p)},
         {"halvable", w.halvable},
         {"halves", points_json(rational_halves(c, p))}};
  return j;
}

json fp_report_json(const FpHalvingReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    cands.push_back({{"value", c.value},
                     {"multiplicity", c.multiplicity},
                     {"in_base_field", c.in_base_field}});
  }
  json diag{{"factor_degrees", r.factor_degrees},
            {"working_degree", r.working_degree},
            {"tower_used", r.tower_used},
            {"candidates", cands},
            {"base_field_candidates", r.base_field_candidates}};
  diag["alt_formulas_agree"] = r.alt_formulas_agree ? json(*r.alt_formulas_agree) : json(nullptr);
  diag["meeting_x"] = r.meeting_x ? json(str(*r.meeting_x)) : json(nullptr);
  diag["meeting_point_verified"] =
      r.meeting_point_verified ? json(*r.meeting_point_verified) : json(nullptr);
  return json{{"halves", points_json(r.halves)}, {"diagnostics", diag}};
}

json verify_complex(Complex a4, Complex a6, Complex x, Complex y) {
  const auto h = verify_halving_numeric(a4, a6, x, y);
  json roots = json::array(), cands = json::array();
  for (const auto& e : h.roots) roots.push_back(str(e));
  for (std::size_t i = 0; i < h.candidates.size(); ++i) {
    cands.push_back({{"x", str(h.candidates[i])}, {"y", str(h.ys[i])}});
  }
  json j{{"max_residual", h.residual},
         {"ill_conditioned", h.ill_conditioned},
         {"roots", roots},
         {"halves", cands}};
  if (!h.note.empty()) j["note"] = h.note;
  return j;
}

// Both worked examples, each check reported separately.
json run_fixtures() {
  json report;
  bool ok = true;
  const auto check = [&ok](bool b) {
    ok = ok && b;
    return b;
  };

  {
    const auto e6 = congruent_curve(BigInt(6));
    const QPoint p(Rational(-3), Rational(9));
    const QPoint two_p = double_point(e6.curve(), p);
    const auto halves = rational_halves(e6, two_p);
    const std::vector<QPoint> expected{QPoint(Rational(18), Rational(-72)),
                                       QPoint(Rational(-2), Rational(-8)),
                                       QPoint(Rational(-3), Rational(9)),
                                       QPoint(Rational(12), Rational(36))};
    bool same = halves.size() == expected.size();
    for (const auto& e : expected) {
      same = same && std::find(halves.begin(), halves.end(), e) != halves.end();
    }
    report["congruent_n6"] = {
        {"curve", "y^2 = x^3 - 36x"},
        {"P", point_json(p)},
        {"2P", point_json(two_p)},
        {"2P_matches", check(two_p == QPoint(Rational(25, 4), Rational(-35, 8)))},
        {"halves_of_2P", points_json(halves)},
        {"halves_match", check(same)},
        {"P_halvable", is_halvable_q(e6, p).halvable},
        {"P_has_no_half", check(rational_halves(e6, p).empty())}};
  }

  {
    const auto f = PrimeField::make(BigInt::from_string("17000000000000071"));
    const FpCurve c = make_fp_curve(f, BigInt(0), BigInt(17), BigInt(71));
    const BigInt y0 = BigInt::from_string("4145148307074498");
    const BigInt order = BigInt::from_string("16999999816127027");
    json readings = json::array();
    std::optional<FpPoint> p;
    for (const char* x0 : {"17071", "1700000000000071"}) {
      const FpPoint cand(FpElem(BigInt::from_string(x0), f), FpElem(y0, f));
      const bool on = on_curve(c, cand);
      readings.push_back({{"x0", x0}, {"on_curve", on}});
      if (on && !p) p = cand;
    }
    json ex{{"p", str(f->p())}, {"curve", "y^2 = x^3 + 17x + 71"}, {"x0_readings", readings}};
    if (check(p.has_value())) {
      const auto r = halve_over_fp_report(c, *p, 0);
      ex["P"] = point_json(*p);
      ex["halves"] = points_json(r.halves);
      ex["unique_half"] = check(r.halves.size() == 1);
      if (r.halves.size() == 1) {
        const FpPoint& q = r.halves[0];
        const FpPoint reference(FpElem(BigInt::from_string("4631223433830370"), f),
                              FpElem(BigInt::from_string("13664114850453464"), f));
        ex["double_of_half_is_P"] = check(double_point(c, q) == *p);
        ex["matches_order_method"] = check(halve_via_order(c, *p, order) == q);
        ex["matches_reference_half"] = q == reference;
      }
      ex["diagnostics"] = fp_report_json(r)["diagnostics"];
    }
    report["prime_field_p17e15"] = ex;
  }
  report["ok"] = ok;
  return report;
}

struct CodecArgs {
  std::string p, a4, a6, px, py, order;
  unsigned pad = 2;
  std::string key, key_int, message;
  PointArgs point;
  std::uint64_t seed = 0;
};

void add_codec_options(CLI::App* app, CodecArgs& a, bool takes_point, bool takes_key) {
  app->add_option("--p", a.p, "prime modulus")->required();
  app->add_option("--a4", a.a4, "coefficient of x")->required();
  app->add_option("--a6", a.a6, "constant term")->required();
  app->add_option("--px", a.px, "base point x")->required();
  app->add_option("--py", a.py, "base point y")->required();
  app->add_option("--order", a.order, "odd group order")->required();
  app->add_option("--pad", a.pad, "decimal digits reserved for the point search (default 2)");
  app->add_option("--message", a.message, "nonnegative integer message");
  if (takes_point) {
    app->add_option("--x", a.point.x, "input point x");
    app->add_option("--y", a.point.y, "input point y");
  }
  if (takes_key) {
    auto* bin = app->add_option("--key", a.key, "key as a bit string, most significant first");
    auto* dec = app->add_option("--key-int", a.key_int, "key as a decimal integer");
    bin->excludes(dec);
  }
}

CodecParams codec_params(const CodecArgs& a) {
  const auto f = parse_field(a.p);
  CodecParams params{make_fp_curve(f, BigInt(0), parse_z(a.a4, "a4"), parse_z(a.a6, "a6")),
                     FpPoint(FpElem(parse_z(a.px, "px"), f), FpElem(parse_z(a.py, "py"), f)),
                     parse_z(a.order, "order"), a.pad};
  validate_codec_params(params);
  return params;
}

CodecKey codec_key(const CodecArgs& a) {
  if (!a.key.empty()) return CodecKey::from_binary(a.key);
  if (!a.key_int.empty()) return CodecKey::from_integer(parse_z(a.key_int, "key-int"));
  throw UsageError("one of --key or --key-int is required");
}

FpPoint codec_input(const CodecArgs& a, const CodecParams& params) {
  if (!a.message.empty()) {
    if (!a.point.x.empty()) throw UsageError("give either --message or --x/--y, not both");
    return encode_message(parse_z(a.message, "message"), params);
  }
  if (a.point.x.empty()) throw UsageError("an input point (--x/--y) or --message is required");
  return parse_fp_point(a.point, params.curve.a4.field());
}

json codec_point_json(const FpPoint& q, const CodecParams& params) {
  json j{{"point", point_json(q)}};
  j["message"] = q.is_infinity() ? json(nullptr) : json(str(decode_message(q, params)));
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point halving on elliptic curves over Q, F_p and C"};
  app.name("halving");
  bool pretty = false, fixtures = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
  app.add_flag("--fixtures", fixtures, "run the two built-in worked examples and report");

  RootArgs hq_roots;
  PointArgs hq_point;
  auto* hq = app.add_subcommand("halve-q", "halve a rational point on y^2 = (x-e0)(x-e1)(x-e2)");
  add_root_options(hq, hq_roots);
  add_point_options(hq, hq_point);

  std::string hf_p;
  CurveArgs hf_curve;
  PointArgs hf_point;
  std::uint64_t hf_seed = 0;
  auto* hf = app.add_subcommand("halve-fp", "halve a point over F_p, with diagnostics");
  hf->add_option("--p", hf_p, "prime modulus")->required();
  add_curve_options(hf, hf_curve);
  add_point_options(hf, hf_point);
  hf->add_option("--seed", hf_seed, "seed for randomized root finding");

  std::string db_p;
  bool db_rational = false;
  CurveArgs db_curve;
  PointArgs db_point;
  auto* db = app.add_subcommand("double", "double a point over F_p (--p) or over Q (--rational)");
  auto* db_p_opt = db->add_option("--p", db_p, "prime modulus");
  auto* db_q_opt = db->add_flag("--rational", db_rational, "work over the rationals");
  db_p_opt->excludes(db_q_opt);
  add_curve_options(db, db_curve);
  add_point_options(db, db_point);

  RootArgs hv_roots;
  PointArgs hv_point;
  auto* hv = app.add_subcommand("halvable-q", "three-squares halvability test over Q");
  add_root_options(hv, hv_roots);
  add_point_options(hv, hv_point);

  std::string cg_n;
  PointArgs cg_point;
  auto* cg = app.add_subcommand("congruent", "halve a point on y^2 = x^3 - n^2 x");
  cg->add_option("--n", cg_n, "positive integer n")->required();
  add_point_options(cg, cg_point);

  CodecArgs enc_args, encr_args, decr_args;
  auto* codec = app.add_subcommand("codec", "toy message cipher on an odd-order curve");
  codec->require_subcommand(1);
  auto* enc = codec->add_subcommand("encode", "message to curve point");
  add_codec_options(enc, enc_args, false, false);
  auto* encr = codec->add_subcommand("encrypt", "double-and-add the key into a point");
  add_codec_options(encr, encr_args, true, true);
  auto* decr = codec->add_subcommand("decrypt", "undo encrypt by subtracting and halving");
  add_codec_options(decr, decr_args, true, true);
  decr->add_option("--seed", decr_args.seed, "seed for randomized root finding");

  std::string vc_a4, vc_a6, vc_x, vc_y;
  auto* vc = app.add_subcommand("verify-complex", "floating-point halving check over C");
  vc->add_option("--a4", vc_a4, "complex a4, e.g. 3-4i")->required();
  vc->add_option("--a6", vc_a6, "complex a6")->required();
  vc->add_option("--x", vc_x, "complex x")->required();
  vc->add_option("--y", vc_y, "complex y")->required();

  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    json result;
    if (*hq) {
      result = halve_q(parse_split(hq_roots), parse_q_point(hq_point));
    } else if (*hf) {
      const auto f = parse_field(hf_p);
      const FpCurve c = parse_fp_curve(hf_curve, f);
      result = fp_report_json(halve_over_fp_report(c, parse_fp_point(hf_point, f), hf_seed));
    } else if (*db) {
      if (db_rational) {
        result = point_json(double_point(parse_q_curve(db_curve), parse_q_point(db_point)));
      } else if (!db_p.empty()) {
        const auto f = parse_field(db_p);
        result = point_json(double_point(parse_fp_curve(db_curve, f), parse_fp_point(db_point, f)));
      } else {
        throw UsageError("double needs --p or --rational");
      }
    } else if (*hv) {
      result = witness_json(is_halvable_q(parse_split(hv_roots), parse_q_point(hv_point)));
    } else if (*cg) {
      const BigInt n = parse_z(cg_n, "n");
      const auto en = congruent_curve(n);
      const QPoint p = parse_q_point(cg_point);
      require_on_curve(en.curve(), p);
      result = halve_q(en, p);
      result["n"] = str(n);
      result["double"] = point_json(double_point(en.curve(), p));
    } else if (*codec) {
      if (*enc) {
        const auto params = codec_params(enc_args);
        if (enc_args.message.empty()) throw UsageError("encode needs --message");
        result = codec_point_json(encode_message(parse_z(enc_args.message, "message"), params),
                                  params);
      } else if (*encr) {
        const auto params = codec_params(encr_args);
        const FpPoint q = codec_input(encr_args, params);
        result = {{"plaintext", point_json(q)},
                  {"point", point_json(encrypt(q, codec_key(encr_args), params))}};
      } else {
        const auto params = codec_params(decr_args);
        if (!decr_args.message.empty()) throw UsageError("decrypt takes --x/--y, not --message");
        const FpPoint q = codec_input(decr_args, params);
        result = codec_point_json(decrypt(q, codec_key(decr_args), params, decr_args.seed), params);
      }
    } else if (*vc) {
      Complex a4, a6, x, y;
      try {
        a4 = parse_complex(vc_a4);
        a6 = parse_complex(vc_a6);
        x = parse_complex(vc_x);
        y = parse_complex(vc_y);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      result = verify_complex(a4, a6, x, y);
    } else if (fixtures) {
      result = run_fixtures();
    } else {
      err << app.help();
      return 2;
    }

    if (pretty) {
      render(result, out, 0);
    } else {
      out << result.dump() << "\n";
    }
    const bool fixtures_failed = result.contains("ok") && !result["ok"].get<bool>();
    return fixtures_failed ? 1 : 0;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace halving::cli
