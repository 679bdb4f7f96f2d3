#pragma once

// Report rendering (human text and JSON) and standalone witness replay.
// JSON output is byte-identical across runs and worker counts; elapsed_ms
// is zeroed there and real timing lives in the human-readable form.

#include <sstream>
#include <string>

#include "json.hpp"

#include "loopsmith/claims.hpp"

namespace loopsmith {

// Re-runs the predicate a witness records, from nothing but the witness
// itself. Returns true iff the recorded situation reproduces.
inline bool replay_witness(ClaimId claim, const Witness& w) {
  const LoopTable& L = w.loop;
  const auto& p = w.params;
  const std::string& k = w.kind;
  const int n = L.order();

  if (k == "criterion-mismatch") {
    const IdentityId id = static_cast<IdentityId>(p[0]);
    bool crit = false;
    switch (claim) {
      case ClaimId::LcAuto: crit = lc_autotopism_criterion(L); break;
      case ClaimId::RcAuto: crit = rc_autotopism_criterion(L); break;
      case ClaimId::CMu: crit = c_mu_criterion(L); break;
      case ClaimId::LcrcLp: {
        crit = true;
        for (int x = 0; x < n && crit; ++x) {
          if (id == IdentityId::LcA) {
            const Permutation lx = left_translation(L, x);
            crit = is_lambda_regular(L, compose(lx, lx));
          } else {
            const Permutation rx = right_translation(L, x);
            crit = is_rho_regular(L, compose(rx, rx));
          }
        }
        break;
      }
      default: return false;
    }
    return satisfies(L, id) != crit;
  }

  if (k == "isocond-mismatch") {
    const int part = p[0];
    std::vector<int> A(p.begin() + 1, p.begin() + 1 + n);
    std::vector<int> B(p.begin() + 1 + n, p.begin() + 1 + 2 * n);
    std::vector<int> h(n * n);
    const Element e = L.identity();
    if (part == 1) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) h[A[x] * n + B[y]] = B[L.mul(x, y)];
      bool isoA = true;
      for (int x = 0; x < n && isoA; ++x)
        for (int y = 0; y < n && isoA; ++y)
          isoA = h[A[x] * n + A[y]] == A[L.mul(x, y)];
      return isoA != detail::raw_in_right_nucleus(h, n, B[e]);
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) h[A[x] * n + B[y]] = A[L.mul(x, y)];
    bool isoB = true;
    for (int x = 0; x < n && isoB; ++x)
      for (int y = 0; y < n && isoB; ++y)
        isoB = h[B[x] * n + B[y]] == B[L.mul(x, y)];
    return isoB != detail::raw_in_left_nucleus(h, n, A[e]);
  }

  if (k == "wilson-direct-mismatch")
    return is_G_loop_wilson(L) != is_G_loop_direct(L);
  if (k == "theta-perpair-direct-mismatch")
    return is_G_loop_theta(L, ThetaReading::PerPair) != is_G_loop_direct(L);

  if (k == "isotope-identity-mismatch") {
    const bool left = claim == ClaimId::LcLeftIso;
    const IdentityId id = left ? IdentityId::LcA : IdentityId::RcA;
    const LoopTable H = left ? left_isotope(L, p[0]) : right_isotope(L, p[0]);
    return satisfies(L, id) != satisfies(H, id);
  }
  if (k == "gl-nucleus-criterion-mismatch")
    return is_G_lambda(L) !=
           nucleus_membership_criterion(L, NucleusSide::Left);
  if (k == "gr-nucleus-criterion-mismatch")
    return is_G_rho(L) != nucleus_membership_criterion(L, NucleusSide::Right);

  if (k == "non-lc-left-isotope")
    return satisfies(L, IdentityId::LcA) &&
           !satisfies(left_isotope(L, p[0]), IdentityId::LcA);
  if (k == "non-rc-right-isotope")
    return satisfies(L, IdentityId::RcA) &&
           !satisfies(right_isotope(L, p[0]), IdentityId::RcA);

  if (k == "universal-iff-mismatch") {
    if (claim == ClaimId::LcUnivIffRight)
      return is_universal(L, IdentityId::LcA) !=
             is_right_universal(L, IdentityId::LcA);
    return is_universal(L, IdentityId::RcA) !=
           is_left_universal(L, IdentityId::RcA);
  }
  if (k == "gloop-decomposition-mismatch") {
    if (claim == ClaimId::LcUnivIffRight)
      return is_G_loop_direct(L) !=
             (is_G_rho(L) &&
              nucleus_membership_criterion(L, NucleusSide::Left));
    return is_G_loop_direct(L) !=
           (is_G_lambda(L) &&
            nucleus_membership_criterion(L, NucleusSide::Right));
  }

  if (k == "non-universal-central-loop") {
    const IdentityId cls = static_cast<IdentityId>(p[0]);
    return satisfies(L, cls) &&
           !satisfies(principal_isotope(L, p[1], p[2]), cls);
  }
  if (k == "universal-without-conclusion") {
    const IdentityId cls = static_cast<IdentityId>(p[0]);
    const IdentityId conc = static_cast<IdentityId>(p[1]);
    return satisfies(L, cls) && is_universal(L, cls) && !satisfies(L, conc);
  }
  if (k == "extra-without-c-moufang")
    return satisfies(L, IdentityId::Extra) &&
           (!satisfies(L, IdentityId::C) ||
            !satisfies(L, IdentityId::Moufang));

  if (k == "non-c-alternative-isotope") {
    const LoopTable H =
        p[0] == 0 ? left_isotope(L, p[1]) : right_isotope(L, p[1]);
    return satisfies(L, IdentityId::C) && is_central_square(L) &&
           satisfies(H, IdentityId::Alt) && is_central_square(H) &&
           !satisfies(H, IdentityId::C);
  }
  if (k == "comm-c-transfer-mismatch") {
    const LoopTable H =
        p[0] == 0 ? left_isotope(L, p[1]) : right_isotope(L, p[1]);
    return satisfies(L, IdentityId::Commutative) &&
           satisfies(H, IdentityId::Commutative) &&
           satisfies(L, IdentityId::C) != satisfies(H, IdentityId::C);
  }

  if (k == "regular-set-violation") {
    const RegularKind kind = static_cast<RegularKind>(p[0]);
    const RegularSet s = regular_set(L, kind);
    bool ok = !s.members.empty() && is_permutation_subgroup(s.members);
    if (kind == RegularKind::Mu && ok)
      ok = s.adjoints.size() == s.members.size() &&
           is_permutation_subgroup(s.adjoints);
    return !ok;
  }
  if (k == "regular-card-mismatch") {
    const LoopTable H = principal_isotope(L, p[0], p[1]);
    const RegularKind kind = static_cast<RegularKind>(p[2]);
    const RegularSet sg = regular_set(L, kind);
    const RegularSet sh = regular_set(H, kind);
    return sg.members.size() != sh.members.size() ||
           sg.adjoints.size() != sh.adjoints.size();
  }

  if (k == "nucleus-transfer-failure") return !nucleus_transfer_check(L, p[0]);
  if (k == "coset-direct-disagreement")
    return gloop_coset_criterion(L) != is_G_loop_direct(L);
  if (k == "c-form-inconsistency") {
    const CosetCriterionResult d = gloop_coset_criterion_detail(L);
    return d.c_form.has_value() && *d.c_form != d.general;
  }
  return false;
}

inline std::string witness_to_text(const Witness& w) {
  std::ostringstream ss;
  ss << "kind=" << w.kind << " loop=" << w.label << " params=[";
  for (size_t i = 0; i < w.params.size(); ++i)
    ss << (i ? "," : "") << w.params[i];
  ss << "]\n    note: " << w.note << "\n    table (order "
     << w.loop.order() << "):\n";
  for (int x = 0; x < w.loop.order(); ++x) {
    ss << "     ";
    for (int y = 0; y < w.loop.order(); ++y) ss << ' ' << w.loop.mul(x, y);
    ss << "\n";
  }
  return ss.str();
}

inline std::string report_to_text(const ClaimReport& r) {
  std::ostringstream ss;
  ss << "claim: " << claim_name(r.claim) << "\n  " << claim_description(r.claim)
     << "\ncorpus: " << r.corpus << "\nverdict: " << verdict_name(r.verdict)
     << "\nstats: loops=" << r.stats.loops
     << " evaluations=" << r.stats.evaluations << "\nelapsed: " << r.elapsed_ms
     << " ms\nwitnesses: " << r.witnesses.size() << "\n";
  for (size_t i = 0; i < r.witnesses.size(); ++i)
    ss << "  witness " << i + 1 << ": " << witness_to_text(r.witnesses[i]);
  ss << "observations: " << r.observations.size() << "\n";
  for (const auto& o : r.observations) ss << "  " << o << "\n";
  return ss.str();
}

inline nlohmann::ordered_json witness_to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["kind"] = w.kind;
  j["label"] = w.label;
  j["loop"] = {{"n", w.loop.order()}, {"rows", w.loop.rows()}};
  j["params"] = w.params;
  j["note"] = w.note;
  return j;
}

inline nlohmann::ordered_json report_to_json_value(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = claim_name(r.claim);
  j["corpus"] = r.corpus;
  j["verdict"] = verdict_name(r.verdict);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(witness_to_json(w));
  j["observations"] = r.observations;
  j["stats"] = {{"loops", r.stats.loops}, {"evaluations", r.stats.evaluations}};
  // zeroed so reports stay byte-identical across runs and worker counts
  j["elapsed_ms"] = 0;
  return j;
}

inline std::string report_to_json(const ClaimReport& r) {
  return report_to_json_value(r).dump(2) + "\n";
}

}  // namespace loopsmith
