#pragma once

// Command-line front end. Exit codes: 0 success / claim green, 1 witness or
// counterexample against expectation, 2 usage or parse error, 3 enumeration
// cap exceeded.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "loopsmith/claims.hpp"
#include "loopsmith/core.hpp"
#include "loopsmith/filter.hpp"
#include "loopsmith/generation.hpp"
#include "loopsmith/identities.hpp"
#include "loopsmith/io.hpp"
#include "loopsmith/isotopy.hpp"
#include "loopsmith/morphisms.hpp"
#include "loopsmith/report.hpp"
#include "loopsmith/subloop.hpp"

namespace loopsmith {

namespace cli_detail {

inline std::string set_to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    if (!first) out += ", ";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

inline void print_loop_block(std::ostream& out, const LoopTable& L) {
  save_loop(L, out);
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"loopsmith: computational algebra on finite loops"};
  app.require_subcommand(1);

  std::string file, property, out_path, method = "direct", target_str;
  std::string claim_str;
  int f_elem = 0, g_elem = 0, order = 0, order_max = 0, workers = 1;
  int max_order = -1;
  bool left_only = false, right_only = false, dedup = false, json = false;

  auto* check =
      app.add_subcommand("check", "validate a loop file, optionally test a "
                                  "property expression");
  check->add_option("file", file, "loop file")->required();
  check->add_option("--property", property,
                    "identity expression, e.g. 'c & !moufang'");

  auto* nuclei = app.add_subcommand(
      "nuclei", "print nuclei, centrum, center and square-centrality");
  nuclei->add_option("file", file, "loop file")->required();

  auto* isotope =
      app.add_subcommand("isotope", "construct an f,g-principal isotope");
  isotope->add_option("file", file, "loop file")->required();
  isotope->add_option("-f", f_elem, "element f")->required();
  isotope->add_option("-g", g_elem, "element g")->required();
  isotope->add_option("-o", out_path, "write the isotope to this file");

  auto* universal = app.add_subcommand(
      "universal", "test whether an identity survives isotopes");
  universal->add_option("file", file, "loop file")->required();
  universal->add_option("--property", property, "identity tag, e.g. 'lc'")
      ->required();
  universal->add_flag("--left", left_only, "left isotopes only");
  universal->add_flag("--right", right_only, "right isotopes only");

  auto* gloop = app.add_subcommand("gloop", "test the G-loop property");
  gloop->add_option("file", file, "loop file")->required();
  gloop->add_option("--method", method,
                    "direct|wilson|theta|companion|coset");

  auto* gen = app.add_subcommand("gen", "generate all normalized loops");
  gen->add_option("--order", order, "loop order")->required();
  gen->add_option("--filter", property, "identity expression filter");
  gen->add_flag("--dedup", dedup, "one loop per isomorphism class");

  auto* search = app.add_subcommand("search", "counterexample search");
  search->add_option("--order-max", order_max, "largest order to scan")
      ->required();
  search->add_option("--property", property, "identity expression")
      ->required();
  search->add_option("--target", target_str, "not-universal|not-gloop")
      ->required();

  auto* verify =
      app.add_subcommand("verify-claim", "replay a registered claim");
  verify->add_option("id", claim_str, "claim name or 'all'")->required();
  verify->add_option("--max-order", max_order,
                     "override the exhaustive corpus order");
  verify->add_flag("--json", json, "machine-readable report");
  verify->add_option("--workers", workers, "worker threads");

  std::vector<const char*> argv;
  argv.push_back("loopsmith");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      const LoopTable L = load_loop(file);
      out << "loop of order " << L.order() << ", identity " << L.identity()
          << "\n";
      if (property.empty()) {
        out << "satisfies: " << mask_to_string(classify(L)) << "\n";
        return 0;
      }
      const FilterExpr expr = FilterExpr::parse(property);
      if (expr.eval(L)) {
        out << "property '" << expr.to_string() << "' holds\n";
        return 0;
      }
      out << "property '" << expr.to_string() << "' fails\n";
      if (auto id = identity_from_name(property)) {
        if (auto w = failing_witness(L, *id))
          out << "witness: x=" << (*w)[0] << " y=" << (*w)[1]
              << " z=" << (*w)[2] << "\n";
      }
      return 1;
    }

    if (nuclei->parsed()) {
      const LoopTable L = load_loop(file);
      using cli_detail::set_to_string;
      out << "left nucleus:   " << set_to_string(left_nucleus(L)) << "\n"
          << "right nucleus:  " << set_to_string(right_nucleus(L)) << "\n"
          << "middle nucleus: " << set_to_string(middle_nucleus(L)) << "\n"
          << "nucleus:        " << set_to_string(nucleus(L)) << "\n"
          << "centrum:        " << set_to_string(centrum(L)) << "\n"
          << "center:         " << set_to_string(center(L)) << "\n"
          << "centrum-square: " << (is_centrum_square(L) ? "yes" : "no")
          << "\n"
          << "central-square: " << (is_central_square(L) ? "yes" : "no")
          << "\n";
      return 0;
    }

    if (isotope->parsed()) {
      const LoopTable L = load_loop(file);
      if (f_elem < 0 || f_elem >= L.order() || g_elem < 0 ||
          g_elem >= L.order()) {
        err << "isotope: f and g must lie in [0, " << L.order() << ")\n";
        return 2;
      }
      const LoopTable H = principal_isotope(L, f_elem, g_elem);
      if (!out_path.empty()) {
        save_loop(H, out_path);
        out << "wrote isotope (identity " << H.identity() << ") to "
            << out_path << "\n";
      } else {
        cli_detail::print_loop_block(out, H);
      }
      return 0;
    }

    if (universal->parsed()) {
      const LoopTable L = load_loop(file);
      const auto id = identity_from_name(property);
      if (!id) {
        err << "universal: unknown identity tag '" << property << "'\n";
        return 2;
      }
      if (left_only) {
        if (auto w = left_universal_witness(L, *id)) {
          out << "not left universal: left isotope at g=" << *w << " fails "
              << property << "\n";
          return 1;
        }
        out << "left universal for " << property << "\n";
        return 0;
      }
      if (right_only) {
        if (auto w = right_universal_witness(L, *id)) {
          out << "not right universal: right isotope at f=" << *w
              << " fails " << property << "\n";
          return 1;
        }
        out << "right universal for " << property << "\n";
        return 0;
      }
      if (auto w = universal_witness(L, *id)) {
        out << "not universal: principal isotope at (f,g)=(" << w->first
            << "," << w->second << ") fails " << property << "\n";
        return 1;
      }
      out << "universal for " << property << "\n";
      return 0;
    }

    if (gloop->parsed()) {
      const LoopTable L = load_loop(file);
      bool result;
      if (method == "direct") {
        result = is_G_loop_direct(L);
      } else if (method == "wilson") {
        result = is_G_loop_wilson(L);
      } else if (method == "theta") {
        const bool single = is_G_loop_theta(L, ThetaReading::SingleTheta);
        const bool perpair = is_G_loop_theta(L, ThetaReading::PerPair);
        out << "theta (single):   " << (single ? "yes" : "no") << "\n"
            << "theta (per-pair): " << (perpair ? "yes" : "no") << "\n";
        result = perpair;
      } else if (method == "companion") {
        result = pseudo_automorphism_companion_check(L);
      } else if (method == "coset") {
        result = gloop_coset_criterion(L);
      } else {
        err << "gloop: unknown method '" << method << "'\n";
        return 2;
      }
      out << "G-loop (" << method << "): " << (result ? "yes" : "no") << "\n";
      return result ? 0 : 1;
    }

    if (gen->parsed()) {
      GenSpec spec{order, true, std::nullopt};
      if (!property.empty()) spec.filter = FilterExpr::parse(property);
      std::vector<LoopTable> loops = all_loops_vec(spec);
      if (dedup) loops = dedup_up_to_isomorphism(loops);
      for (size_t i = 0; i < loops.size(); ++i) {
        out << "# loop " << i << "\n";
        cli_detail::print_loop_block(out, loops[i]);
        out << "\n";
      }
      out << "# total " << loops.size() << "\n";
      return 0;
    }

    if (search->parsed()) {
      SearchTarget target;
      if (target_str == "not-universal") {
        target = SearchTarget::NotUniversal;
      } else if (target_str == "not-gloop") {
        target = SearchTarget::NotGloop;
      } else {
        err << "search: unknown target '" << target_str << "'\n";
        return 2;
      }
      const FilterExpr expr = FilterExpr::parse(property);
      if (auto w = search_counterexample(expr, order_max, target)) {
        out << "counterexample at order " << w->order << ", stream index "
            << w->stream_index << ", (f,g)=(" << w->f << "," << w->g
            << "): " << w->note << "\n";
        cli_detail::print_loop_block(out, w->loop);
        return 1;
      }
      out << "no counterexample up to order " << order_max << "\n";
      return 0;
    }

    if (verify->parsed()) {
      VerifyOptions opt;
      if (max_order > 0) opt.max_order = max_order;
      opt.workers = workers;
      std::vector<ClaimId> ids;
      if (claim_str == "all") {
        ids = all_claims();
      } else if (auto id = claim_from_name(claim_str)) {
        ids.push_back(*id);
      } else {
        err << "verify-claim: unknown claim '" << claim_str << "'\n";
        return 2;
      }
      bool green = true;
      nlohmann::ordered_json all_json = nlohmann::ordered_json::array();
      for (ClaimId id : ids) {
        const ClaimReport r = verify_claim(id, opt);
        green = green && claim_green(r);
        if (json)
          all_json.push_back(report_to_json_value(r));
        else
          out << report_to_text(r) << "\n";
      }
      if (json) {
        if (all_json.size() == 1)
          out << all_json.front().dump(2) << "\n";
        else
          out << all_json.dump(2) << "\n";
      }
      return green ? 0 : 1;
    }
  } catch (const LoopError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind == Err::OrderTooLarge ? 3 : 2;
  }
  return 2;
}

}  // namespace loopsmith
