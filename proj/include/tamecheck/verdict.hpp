#ifndef TAMECHECK_VERDICT_HPP
#define TAMECHECK_VERDICT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tamecheck/arc.hpp"
#include "tamecheck/polynomial.hpp"

namespace tamecheck {

enum class Status { Holds, Fails, Undetermined };

// Refinements: OnSample marks an aggregate verified only on sampled base
// points; WithCaveat marks a conclusion that used the Zariski closure where
// the real set could be smaller. Only unqualified verdicts bind in the
// implication audit.
enum class Qualifier { None, OnSample, WithCaveat };

std::string status_str(Status s);
std::string qualifier_str(Qualifier q);

// u * f^m = sum_k cofactor_k * prod(ideal_gens[indices_k]); u(0) != 0.
struct ClosureCertificate {
  int m = 1;
  Polynomial f;
  std::vector<Polynomial> ideal_gens;
  Polynomial unit;
  struct Term {
    std::vector<int> gen_indices;  // multiset of size m
    Polynomial cofactor;
  };
  std::vector<Term> terms;
  Point base;  // certificate is a germ statement at this (translated) point
};

bool verify_certificate(const ClosureCertificate& c, std::string* why = nullptr);

// ord_s f(mu) < min_j ord_s g_j(mu): violates the valuative bound defining
// the integral closure. When avoid generators are present the arc must leave
// their zero set (some avoid polynomial has finite order along it).
struct ArcWitness {
  Arc arc;
  Polynomial f;
  std::vector<Polynomial> ideal_gens;
  std::vector<Polynomial> avoid_gens;
  Point base;
  long ord_f = 0;
  long ord_ideal = 0;  // ORDER_INFINITY encoded by the Univar being zero
};

bool verify_arc_witness(const ArcWitness& w, std::string* why = nullptr);

// A rational point at which every listed polynomial vanishes exactly; the
// scaled copies point/2^k (k <= scale_checks) vanish too, supporting the
// germ-at-origin reading. `separating` (optional) is nonzero at the point.
struct PointWitness {
  Point point;  // full ring arity of `vanishing`
  std::vector<Polynomial> vanishing;
  std::optional<Polynomial> separating;
  int scale_checks = 0;
  std::vector<int> scaled_coords;  // coordinates scaled during the germ check
};

bool verify_point_witness(const PointWitness& w, std::string* why = nullptr);

struct NoteEvidence {
  std::string note;
};

using Evidence =
    std::variant<std::monostate, ClosureCertificate, ArcWitness, PointWitness, NoteEvidence>;

struct Verdict {
  Status status = Status::Undetermined;
  Qualifier qualifier = Qualifier::None;
  std::string scope;
  Evidence evidence;

  bool binding() const { return qualifier == Qualifier::None; }

  static Verdict holds(std::string scope_, Evidence e = std::monostate{},
                       Qualifier q = Qualifier::None) {
    return {Status::Holds, q, std::move(scope_), std::move(e)};
  }
  static Verdict fails(std::string scope_, Evidence e) {
    return {Status::Fails, Qualifier::None, std::move(scope_), std::move(e)};
  }
  static Verdict undetermined(std::string note) {
    return {Status::Undetermined, Qualifier::None, "", NoteEvidence{std::move(note)}};
  }
};

}  // namespace tamecheck

#endif
