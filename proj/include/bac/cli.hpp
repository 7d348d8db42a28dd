#pragma once

#include "bac/emit.hpp"
#include "bac/geometry.hpp"
#include "bac/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace bac::cli {

namespace detail {

inline std::string word_bits(Word w, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (w >> (n - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

inline Json channel_json(const ChannelParams& ch) {
  Json j;
  j["p"] = format_rational(ch.p());
  j["q"] = format_rational(ch.q());
  return j;
}

inline std::string region_name(Region r) {
  switch (r) {
    case Region::triangle_t: return "triangle";
    case Region::triangle_t_prime: return "mirror-triangle";
    case Region::noisy_line: return "noisy-line";
    default: return "unreasonable";
  }
}

}  // namespace detail

// Everything the binary can do, callable in-process for tests.  Returns the
// process exit code: 0 ok, 1 usage, 2 domain error, 3 verification failure.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact analysis of decision criteria for binary asymmetric channels"};
  app.require_subcommand(1);

  struct {
    std::string format = "json";
    int precision = 12;
    std::string path;
  } cfg;
  std::string payload;
  int exit_code = 0;

  auto add_output = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    c->add_option("--precision", cfg.precision, "significant digits for reals")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    c->add_option("-o,--output", cfg.path, "write atomically to this file");
  };
  auto sig = [&](double x) { return round_sig(x, cfg.precision); };

  // ---- matrix ------------------------------------------------------------
  struct {
    std::string p, q;
    int n = 2;
  } mx;
  auto* c_matrix = app.add_subcommand("matrix", "n-fold transition matrix, exact entries");
  c_matrix->add_option("--p", mx.p, "Pr(1|0), rational or decimal")->required();
  c_matrix->add_option("--q", mx.q, "Pr(0|1), rational or decimal")->required();
  c_matrix->add_option("--n", mx.n, "block length")->required();
  add_output(c_matrix, {"json", "csv"});
  c_matrix->callback([&] {
    TransitionMatrix m = build_matrix(mx.n, make_channel(mx.p, mx.q));
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "x,y,prob\n";
      for (Word x = 0; x < m.dim(); ++x)
        for (Word y = 0; y < m.dim(); ++y)
          os << detail::word_bits(x, m.n()) << ',' << detail::word_bits(y, m.n()) << ','
             << format_rational(m.value_at(x, y)) << '\n';
      payload = os.str();
      return;
    }
    Json j = detail::channel_json(m.channel());
    j["n"] = m.n();
    j["region"] = detail::region_name(m.channel().region());
    Json rows = Json::array();
    for (Word x = 0; x < m.dim(); ++x) {
      Json row = Json::array();
      for (Word y = 0; y < m.dim(); ++y) row.push_back(format_rational(m.value_at(x, y)));
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    payload = j.dump() + "\n";
  });

  // ---- ordered-form -------------------------------------------------------
  struct {
    std::string p, q;
    int n = 2;
  } of;
  auto* c_of = app.add_subcommand("ordered-form", "row-rank fingerprint of the matrix");
  c_of->add_option("--p", of.p)->required();
  c_of->add_option("--q", of.q)->required();
  c_of->add_option("--n", of.n)->required();
  add_output(c_of, {"json", "csv"});
  c_of->callback([&] {
    ChannelParams ch = make_channel(of.p, of.q);
    OrderedForm f = ordered_form(build_matrix(of.n, ch));
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "x,y,count\n";
      for (std::size_t x = 0; x < f.dim(); ++x)
        for (std::size_t y = 0; y < f.dim(); ++y)
          os << detail::word_bits(x, f.n()) << ',' << detail::word_bits(y, f.n()) << ','
             << f.at(x, y) << '\n';
      payload = os.str();
      return;
    }
    Json j = detail::channel_json(ch);
    j["n"] = f.n();
    Json rows = Json::array();
    for (std::size_t x = 0; x < f.dim(); ++x) {
      Json row = Json::array();
      for (std::size_t y = 0; y < f.dim(); ++y) row.push_back(f.at(x, y));
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    payload = j.dump() + "\n";
  });

  // ---- equiv ---------------------------------------------------------------
  struct {
    std::string p, q, p2, q2, method = "auto";
    int n = 0, horizon = 0;
  } eq;
  auto* c_eq = app.add_subcommand("equiv", "decide n-equivalence of two channels");
  c_eq->add_option("--p", eq.p)->required();
  c_eq->add_option("--q", eq.q)->required();
  c_eq->add_option("--p2", eq.p2)->required();
  c_eq->add_option("--q2", eq.q2)->required();
  c_eq->add_option("--n", eq.n, "block length");
  c_eq->add_option("--horizon", eq.horizon,
                   "scan all block lengths up to this weight instead of one n");
  c_eq->add_option("--method", eq.method, "matrix | families | s | auto")
      ->check(CLI::IsMember({"auto", "matrix", "families", "s"}));
  add_output(c_eq, {"json"});
  c_eq->callback([&] {
    ChannelParams c1 = make_channel(eq.p, eq.q), c2 = make_channel(eq.p2, eq.q2);
    if ((eq.n > 0) == (eq.horizon > 0))
      throw CLI::ValidationError("equiv", "pass exactly one of --n and --horizon");
    Json j;
    if (eq.horizon > 0) {
      Separation sep = separate(c1, c2, eq.horizon);
      j["horizon"] = sep.horizon;
      j["equal_up_to_horizon"] = !sep.separated_at.has_value();
      j["separated_at"] = sep.separated_at ? Json(*sep.separated_at) : Json(nullptr);
    } else {
      std::string method = eq.method;
      if (method == "auto") method = eq.n <= matrix_cap() ? "matrix" : "families";
      bool ans = method == "matrix"     ? equivalent(c1, c2, eq.n)
                 : method == "families" ? equivalent_by_families(c1, c2, eq.n)
                                        : equivalent_by_s(c1, c2, eq.n);
      j["equivalent"] = ans;
      j["method"] = method;
      j["n"] = eq.n;
    }
    payload = j.dump() + "\n";
  });

  // ---- classify -------------------------------------------------------------
  struct {
    std::string p, q;
    int n = 2;
  } cl;
  auto* c_cl = app.add_subcommand("classify", "locate the decision criterion of a channel");
  c_cl->add_option("--p", cl.p)->required();
  c_cl->add_option("--q", cl.q)->required();
  c_cl->add_option("--n", cl.n)->required();
  add_output(c_cl, {"json"});
  c_cl->callback([&] {
    CriticalSet cs(cl.n);
    Criterion c = classify(make_channel(cl.p, cl.q), cs);
    Json j;
    j["index"] = c.index;
    if (c.kind == Criterion::Kind::unstable) {
      j["kind"] = "unstable";
      j["curve"] = cs[static_cast<std::size_t>(c.index)].str();
    } else {
      j["kind"] = "stable";
      j["interval"] = Json::array({cs[static_cast<std::size_t>(c.index)].str(),
                                   cs[static_cast<std::size_t>(c.index) + 1].str()});
    }
    payload = j.dump() + "\n";
  });

  // ---- criticals -------------------------------------------------------------
  struct {
    int n = 2;
  } cr;
  auto* c_cr = app.add_subcommand("criticals", "critical values D_n");
  c_cr->add_option("--n", cr.n)->required();
  add_output(c_cr, {"json", "csv"});
  c_cr->callback([&] {
    CriticalSet cs(cr.n);
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "index,value,weight\n";
      for (std::size_t i = 0; i < cs.size(); ++i)
        os << i << ',' << cs[i].str() << ',' << cs[i].weight() << '\n';
      payload = os.str();
      return;
    }
    Json j;
    j["n"] = cs.n();
    j["values"] = json_fractions(cs.values());
    payload = j.dump() + "\n";
  });

  // ---- count -----------------------------------------------------------------
  struct {
    int n = 2;
    std::string format = "plain";
  } cn;
  auto* c_cn = app.add_subcommand("count", "number of stable criteria t_n");
  c_cn->add_option("--n", cn.n)->required();
  c_cn->add_option("--format", cn.format)->check(CLI::IsMember({"plain", "json"}));
  c_cn->add_option("-o,--output", cfg.path, "write atomically to this file");
  c_cn->callback([&] {
    long long t = stable_count(cn.n);
    if (cn.format == "json") {
      Json j;
      j["n"] = cn.n;
      j["stable"] = t;
      payload = j.dump() + "\n";
    } else {
      payload = std::to_string(t) + "\n";
    }
  });

  // ---- s-value ----------------------------------------------------------------
  struct {
    std::string p, q;
    int order = 16;
  } sv;
  auto* c_sv = app.add_subcommand("s-value", "S(p,q) with its exact critical bracket");
  c_sv->add_option("--p", sv.p)->required();
  c_sv->add_option("--q", sv.q)->required();
  c_sv->add_option("--order", sv.order, "weight bound for the bracket")
      ->capture_default_str();
  add_output(c_sv, {"json"});
  c_sv->callback([&] {
    SValue v = bac_s(make_channel(sv.p, sv.q), sv.order);
    Json j;
    j["s"] = sig(static_cast<double>(v.value));
    j["order"] = sv.order;
    j["hit"] = v.hit ? Json(v.hit->str()) : Json(nullptr);
    j["bracket"] = v.bracket
                       ? Json::array({v.bracket->first.str(), v.bracket->second.str()})
                       : Json(nullptr);
    payload = j.dump() + "\n";
  });

  // ---- distance ------------------------------------------------------------------
  struct {
    std::string p, q, p2, q2;
  } ds;
  auto* c_ds = app.add_subcommand("distance", "log-scale distance between criteria positions");
  c_ds->add_option("--p", ds.p)->required();
  c_ds->add_option("--q", ds.q)->required();
  c_ds->add_option("--p2", ds.p2)->required();
  c_ds->add_option("--q2", ds.q2)->required();
  add_output(c_ds, {"json"});
  c_ds->callback([&] {
    long double d = channel_distance(make_channel(ds.p, ds.q), make_channel(ds.p2, ds.q2));
    Json j;
    j["distance"] = sig(static_cast<double>(d));
    payload = j.dump() + "\n";
  });

  // ---- areas ------------------------------------------------------------------------
  struct {
    std::string r;
    int n = 0;
  } ar;
  auto* c_ar = app.add_subcommand("areas", "region areas from the 1-D reduction");
  c_ar->add_option("--r", ar.r, "single level a/b");
  c_ar->add_option("--n", ar.n, "full table for block length n");
  add_output(c_ar, {"json", "csv"});
  c_ar->callback([&] {
    if (ar.r.empty() == (ar.n == 0))
      throw CLI::ValidationError("areas", "pass exactly one of --r and --n");
    if (!ar.r.empty()) {
      Fraction r = parse_fraction(ar.r);
      double a = area(r);
      if (cfg.format == "csv") {
        payload = "r,area\n" + r.str() + "," + format_sig(a, cfg.precision) + "\n";
        return;
      }
      Json j;
      j["r"] = r.str();
      j["area"] = sig(a);
      payload = j.dump() + "\n";
      return;
    }
    AreaTable t = percentages(ar.n);
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "lo,hi,share_percent\n";
      for (std::size_t i = 0; i < t.shares.size(); ++i)
        os << t.boundaries[i].str() << ',' << t.boundaries[i + 1].str() << ','
           << format_sig(t.shares[i], cfg.precision) << '\n';
      payload = os.str();
      return;
    }
    Json j;
    j["n"] = t.n;
    j["boundaries"] = json_fractions(t.boundaries);
    Json cum = Json::array(), sh = Json::array();
    for (double c : t.cumulative) cum.push_back(sig(c));
    for (double s : t.shares) sh.push_back(sig(s));
    j["cumulative"] = std::move(cum);
    j["shares"] = std::move(sh);
    payload = j.dump() + "\n";
  });

  // ---- percentages ----------------------------------------------------------------------
  struct {
    int n = 3;
    bool rounded = false;
  } pc;
  auto* c_pc = app.add_subcommand("percentages", "stable-region shares of the triangle");
  c_pc->add_option("--n", pc.n)->required();
  c_pc->add_flag("--rounded", pc.rounded, "round to whole percent");
  add_output(c_pc, {"json", "csv"});
  c_pc->callback([&] {
    AreaTable t = percentages(pc.n);
    std::vector<long long> ints;
    if (pc.rounded) ints = rounded_shares(t);
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "lo,hi,share_percent\n";
      for (std::size_t i = 0; i < t.shares.size(); ++i) {
        os << t.boundaries[i].str() << ',' << t.boundaries[i + 1].str() << ',';
        if (pc.rounded)
          os << ints[i] << '\n';
        else
          os << format_fixed(t.shares[i], 2) << '\n';
      }
      payload = os.str();
      return;
    }
    Json j;
    j["n"] = t.n;
    Json sh = Json::array();
    if (pc.rounded)
      for (long long v : ints) sh.push_back(v);
    else
      for (double s : t.shares) sh.push_back(std::strtod(format_fixed(s, 2).c_str(), nullptr));
    j["shares"] = std::move(sh);
    payload = j.dump() + "\n";
  });

  // ---- ratios ---------------------------------------------------------------------------
  struct {
    int n = 4;
  } rt;
  auto* c_rt = app.add_subcommand("ratios", "extreme-to-average share ratios R(n), r(n)");
  c_rt->add_option("--n", rt.n)->required();
  add_output(c_rt, {"json", "csv"});
  c_rt->callback([&] {
    Ratios r = ratios(rt.n);
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "n,regions,boundary,R,r\n"
         << r.n << ',' << r.regions << ',' << r.boundary.str() << ','
         << format_sig(r.quasi_symmetric, cfg.precision) << ','
         << format_sig(r.z_region, cfg.precision) << '\n';
      payload = os.str();
      return;
    }
    Json j;
    j["n"] = r.n;
    j["regions"] = r.regions;
    j["boundary"] = r.boundary.str();
    j["R"] = sig(r.quasi_symmetric);
    j["r"] = sig(r.z_region);
    payload = j.dump() + "\n";
  });

  // ---- curve ----------------------------------------------------------------------------
  struct {
    std::string r;
    int samples = 256;
  } cv;
  auto* c_cv = app.add_subcommand("curve", "trace one critical level curve inside the triangle");
  c_cv->add_option("--r", cv.r, "level a/b in (0,1]")->required();
  c_cv->add_option("--samples", cv.samples)->capture_default_str();
  add_output(c_cv, {"json", "csv", "svg"});
  c_cv->callback([&] {
    LevelCurve curve = trace_level_curve(parse_fraction(cv.r), cv.samples);
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "p,q\n";
      for (const auto& pt : curve.points)
        os << format_sig(pt[0], cfg.precision) << ',' << format_sig(pt[1], cfg.precision)
           << '\n';
      payload = os.str();
      return;
    }
    if (cfg.format == "svg") {
      SvgCanvas svg;
      svg.line(0, 0, 0, 1, "black");
      svg.line(0, 0, 0.5, 0.5, "black");
      svg.line(0, 1, 0.5, 0.5, "black", true);
      svg.polyline(curve.points, "crimson");
      const auto& mid = curve.points[curve.points.size() / 2];
      svg.text(mid[0] + 0.02, mid[1], curve.r.str());
      payload = svg.finish();
      return;
    }
    Json j;
    j["r"] = curve.r.str();
    j["samples"] = static_cast<int>(curve.points.size());
    j["points"] = json_points(curve.points, cfg.precision);
    payload = j.dump() + "\n";
  });

  // ---- square-curves ----------------------------------------------------------------------
  struct {
    int n = 5;
    int samples = 64;
  } sq;
  auto* c_sq = app.add_subcommand("square-curves",
                                  "all critical curves of weight <= n over the unit square");
  c_sq->add_option("--n", sq.n)->required();
  c_sq->add_option("--samples", sq.samples)->capture_default_str();
  add_output(c_sq, {"json", "csv", "svg"});
  c_sq->callback([&] {
    std::vector<SquareCurve> curves = square_curves(sq.n, sq.samples);
    const long long t = stable_count(sq.n);
    if (cfg.format == "csv") {
      std::ostringstream os;
      os << "label,p,q\n";
      for (const SquareCurve& c : curves)
        for (const auto& pt : c.points)
          os << c.label() << ',' << format_sig(pt[0], cfg.precision) << ','
             << format_sig(pt[1], cfg.precision) << '\n';
      payload = os.str();
      return;
    }
    if (cfg.format == "svg") {
      SvgCanvas svg;
      svg.polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}, "black");
      for (const SquareCurve& c : curves)
        svg.polyline(c.points, c.noisy ? "gray" : "steelblue", c.noisy);
      for (const SquareCurve& c : curves) {
        if (c.mirrored || c.involuted || c.noisy || c.points.empty()) continue;
        const auto& mid = c.points[c.points.size() / 2];
        svg.text(mid[0] + 0.01, mid[1], c.r.str());
      }
      payload = svg.finish();
      return;
    }
    Json j;
    j["n"] = sq.n;
    j["samples"] = sq.samples;
    j["curves_with_axes"] = 2 * t + 1;
    j["curves_without_axes"] = 2 * t - 1;
    Json arr = Json::array();
    for (const SquareCurve& c : curves) {
      Json e;
      e["label"] = c.label();
      e["r"] = c.noisy ? Json(nullptr) : Json(c.r.str());
      e["mirrored"] = c.mirrored;
      e["involuted"] = c.involuted;
      e["noisy"] = c.noisy;
      e["points"] = json_points(c.points, cfg.precision);
      arr.push_back(std::move(e));
    }
    j["curves"] = std::move(arr);
    payload = j.dump() + "\n";
  });

  // ---- verify ----------------------------------------------------------------------------
  struct {
    int n = 4;
    int reps = 3;
    int trials = 10;
    int witness_channels = 10;
    std::uint64_t seed = 20240923;
  } vf;
  auto* c_vf = app.add_subcommand("verify",
                                  "brute-force cross-check of the classification theorem");
  c_vf->add_option("--n", vf.n)->required();
  c_vf->add_option("--reps", vf.reps, "representatives per stable region")
      ->capture_default_str();
  c_vf->add_option("--trials", vf.trials, "random channels for symmetry checks")
      ->capture_default_str();
  c_vf->add_option("--witness-channels", vf.witness_channels,
                   "random channels for witness-word checks")
      ->capture_default_str();
  c_vf->add_option("--seed", vf.seed)->capture_default_str();
  add_output(c_vf, {"json"});
  c_vf->callback([&] {
    TheoremReport rep = verify_theorem(vf.n, vf.reps);
    std::vector<std::string> mism = rep.mismatches;

    std::mt19937_64 rng(vf.seed);
    bool witness_ok = true;
    for (int i = 0; i < vf.witness_channels; ++i)
      witness_ok &= verify_witness_words(random_channel(rng), vf.n, &mism);
    witness_ok &= verify_witness_words(ChannelParams(Rational(0), Rational(1, 3)), vf.n, &mism);

    bool sym_ok = verify_symmetries(vf.n, vf.trials, vf.seed, &mism);

    std::sort(mism.begin(), mism.end());
    Json j;
    j["n"] = rep.n;
    j["expected_regions"] = rep.expected_regions;
    j["regions_found"] = rep.regions_found;
    j["curves_found"] = rep.curves_found;
    j["witness_ok"] = witness_ok;
    j["symmetries_ok"] = sym_ok;
    j["mismatches"] = mism;
    j["ok"] = mism.empty();
    payload = j.dump() + "\n";
    if (!mism.empty()) exit_code = 3;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    if (rc == 0) return 0;
    err << app.help();
    return 1;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  }

  write_output(cfg.path, payload, out);
  return exit_code;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace bac::cli
