// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

#include "metro/validation.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace metro {
namespace {

using G = FunctionalGroup;

struct Rule {
  const char* code;
  Severity severity;
  const char* message;
  const char* anchor;
};

constexpr Rule kR1{"R1", Severity::kError,
                   "S reference point does not have terminal equipment downstream",
                   "ITU-T I.411 (S reference point)"};
constexpr Rule kR2{"R2", Severity::kError,
                   "T reference point does not separate an NT1 from an NT2/RG/AF",
                   "ITU-T I.411; BBF TR-145 (T reference point)"};
constexpr Rule kR3{"R3", Severity::kError,
                   "U reference point is not on the transmission-line side of the NT",
                   "ITU-T I.411 (U reference point)"};
constexpr Rule kR4{"R4", Severity::kWarning,
                   "R/S reference point does not coincide with a PAI",
                   "BBF TR-156 (R/S and PAI)"};
constexpr Rule kR5{"R5", Severity::kError,
                   "subsuming element does not carry both adjacent functional groups",
                   "ITU-T Y.120 (subsumed reference point)"};
constexpr Rule kR6{"R6", Severity::kError,
                   "U1 and T declared at the same endpoint pair",
                   "BBF TR-145 (U1 and T reference points)"};
constexpr Rule kR7{"R7", Severity::kError,
                   "A reference point declared although the ONU includes the AF",
                   "ITU-T G.984.1 (reference point a)"};
constexpr Rule kR8{"R8", Severity::kError,
                   "segments of different operators share no RPI-N or IrDI",
                   "ITU-T Y.110 (RPI-N interconnection)"};
constexpr Rule kR9{"R9", Severity::kWarning,
                   "UNI designator is ambiguous; use S, T or U",
                   "ITU-T Y.120 (UNI)"};
constexpr Rule kR10{"R10", Severity::kWarning,
                    "T reference point downstream of an RG; this is the S reference point",
                    "BBF TR-145 (S reference point)"};

class Checker {
 public:
  explicit Checker(const Model& m) : m_(m) {}

  std::vector<Diagnostic> run() {
    bool pon = std::any_of(m_.elements().begin(), m_.elements().end(), [](const auto& kv) {
      return kv.second.has_group(G::kOLT) || kv.second.has_group(G::kONU);
    });
    for (const auto& [id, rp] : m_.reference_points()) {
      switch (rp.designator.kind) {
        case DesignatorKind::kS: check_s(rp); break;
        case DesignatorKind::kT: check_t(rp); break;
        case DesignatorKind::kU: check_u(rp); break;
        case DesignatorKind::kU1: check_u1(rp); break;
        case DesignatorKind::kRS:
          if (pon) check_rs(rp);
          break;
        case DesignatorKind::kAEphemeral: check_a(rp); break;
        case DesignatorKind::kUniLegacy: emit(kR9, subjects(rp)); break;
        default: break;
      }
      if (rp.subsumed()) check_subsumed(rp);
    }
    check_segments();

    std::sort(out_.begin(), out_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      auto num = [](const Diagnostic& d) { return std::stoi(d.code.substr(1)); };
      return std::forward_as_tuple(num(a), a.subjects) <
             std::forward_as_tuple(num(b), b.subjects);
    });
    return std::move(out_);
  }

 private:
  // Functional groups on one side of an RP: the element's groups, or the
  // single named group of a subsumed RP.
  std::vector<G> side(const ReferencePoint& rp, bool upstream) const {
    const auto& ref = upstream ? rp.upstream_element : rp.downstream_element;
    if (rp.subsumed()) {
      if (auto g = parse_functional_group(ref)) return {*g};
      return {};
    }
    const auto* e = m_.find_element(ref);
    return e ? e->functional_groups : std::vector<G>{};
  }

  static bool any_of(const std::vector<G>& have, std::initializer_list<G> want) {
    return std::any_of(want.begin(), want.end(), [&](G g) {
      return std::find(have.begin(), have.end(), g) != have.end();
    });
  }

  static std::vector<std::string> subjects(const ReferencePoint& rp) {
    if (rp.subsumed()) return {rp.id, *rp.subsuming_element};
    return {rp.id, rp.upstream_element, rp.downstream_element};
  }

  void emit(const Rule& r, std::vector<std::string> subj) {
    out_.push_back({r.code, r.severity, std::move(subj), r.message, r.anchor});
  }

  void check_s(const ReferencePoint& rp) {
    if (!any_of(side(rp, false), {G::kTE})) emit(kR1, subjects(rp));
  }

  void check_t(const ReferencePoint& rp) {
    auto up = side(rp, true);
    if (any_of(up, {G::kRG})) {
      emit(kR10, subjects(rp));
      return;
    }
    if (!any_of(up, {G::kNT1}) || !any_of(side(rp, false), {G::kNT2, G::kRG, G::kAF})) {
      emit(kR2, subjects(rp));
    }
  }

  void check_u(const ReferencePoint& rp) {
    if (!any_of(side(rp, false), {G::kNT1, G::kNT2, G::kRG, G::kAF}) ||
        any_of(side(rp, true), {G::kTE, G::kNT2, G::kRG})) {
      emit(kR3, subjects(rp));
    }
  }

  void check_u1(const ReferencePoint& rp) {
    for (const auto& [id, t] : m_.reference_points()) {
      if (t.designator.kind != DesignatorKind::kT) continue;
      if (same_pair(rp, t)) emit(kR6, {rp.id, t.id});
    }
  }

  static bool same_pair(const ReferencePoint& a, const ReferencePoint& b) {
    if (a.subsumed() != b.subsumed()) return false;
    if (a.subsumed() && a.subsuming_element != b.subsuming_element) return false;
    return (a.upstream_element == b.upstream_element &&
            a.downstream_element == b.downstream_element) ||
           (a.upstream_element == b.downstream_element &&
            a.downstream_element == b.upstream_element);
  }

  void check_rs(const ReferencePoint& rp) {
    for (const auto& [id, pai] : m_.reference_points()) {
      if (pai.designator.kind == DesignatorKind::kPAI &&
          pai.upstream_element == rp.upstream_element &&
          pai.downstream_element == rp.downstream_element &&
          pai.subsumed() == rp.subsumed()) {
        return;
      }
    }
    emit(kR4, subjects(rp));
  }

  void check_a(const ReferencePoint& rp) {
    auto up = side(rp, true);
    if (any_of(up, {G::kONU}) && any_of(up, {G::kAF})) emit(kR7, subjects(rp));
  }

  void check_subsumed(const ReferencePoint& rp) {
    const auto* holder = m_.find_element(*rp.subsuming_element);
    auto up = parse_functional_group(rp.upstream_element);
    auto down = parse_functional_group(rp.downstream_element);
    if (holder == nullptr || !up || !down || !holder->has_group(*up) ||
        !holder->has_group(*down)) {
      emit(kR5, subjects(rp));
    }
  }

  void check_segments() {
    const auto& segs = m_.segments();
    for (auto a = segs.begin(); a != segs.end(); ++a) {
      for (auto b = std::next(a); b != segs.end(); ++b) {
        const Segment& x = a->second;
        const Segment& y = b->second;
        if (x.operator_id == y.operator_id) continue;
        bool adjacent = false;
        bool interconnect = false;
        for (const auto& rid : x.bounding_rp_ids) {
          if (!std::binary_search(y.bounding_rp_ids.begin(), y.bounding_rp_ids.end(), rid)) {
            continue;
          }
          adjacent = true;
          const auto* rp = m_.find_rp(rid);
          if (rp && (rp->kind == RpKind::kRpiN || rp->kind == RpKind::kIrDI)) {
            interconnect = true;
          }
        }
        if (adjacent && !interconnect) emit(kR8, {x.id, y.id});
      }
    }
  }

  const Model& m_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::string_view to_string(Severity s) {
  return s == Severity::kError ? "error" : "warning";
}

std::vector<Diagnostic> validate_reference_configuration(const Model& model) {
  return Checker(model).run();
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

std::vector<SubsumedPoint> subsumption_report(const Model& model) {
  std::vector<SubsumedPoint> out;
  for (const auto& [id, rp] : model.reference_points()) {
    if (rp.subsumed()) out.push_back({id, *rp.subsuming_element, false});
  }
  return out;
}

std::string render_text(const Diagnostic& d) {
  std::string s = d.code + " " + std::string(to_string(d.severity));
  for (std::size_t i = 0; i < d.subjects.size(); ++i) {
    s += (i == 0 ? " " : ",") + d.subjects[i];
  }
  return s + ": " + d.message + " (" + d.anchor + ")";
}

}  // namespace metro
