#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partible/reduction.hpp"
#include "partible/sequences.hpp"

namespace partible {

enum class Status { Verified, Failed, NotApplicable, Exploratory };

const char* status_str(Status s);

// One verified/failed/not-applicable congruence instance. Residues are
// normalized to [0, modulus); modulus 0 marks an exact integer identity
// (compared as lhs - rhs == 0).
struct CongruenceReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::NotApplicable;
  BigInt lhs = 0, rhs = 0, modulus = 0;
  double wall_ms = 0;  // diagnostic only, never serialized
};

std::string report_json_line(const CongruenceReport& r);
std::string report_csv_row(const CongruenceReport& r);
std::string report_text_line(const CongruenceReport& r);
inline constexpr const char* kCsvHeader = "claim,params,status,lhs,rhs,modulus";

// sum_{k=0}^{n-1} eps^k (2k+1)^(2v [+1]) D_k(z) mod modulus, streaming the
// Delannoy values with full integers and reducing once per term.
BigInt sum_weighted(unsigned long n, unsigned v, int eps, const BigInt& z,
                    bool odd_power, const BigInt& modulus);

// sum_{k<n} (2k+1)^{2v} eps^k D_k(z) = c_v (resp. ct_v) sum_{k<n} eps^k D_k(z)
// mod n, compared after clearing the z^v (resp. (z+1)^v) denominator.
CongruenceReport verify_theorem_1_1(unsigned long n, const BigInt& z,
                                    unsigned v, int eps,
                                    const ConstantTable& table);

// Prime case with the Legendre-symbol right-hand side.
CongruenceReport verify_theorem_1_2(const BigInt& p, const BigInt& z,
                                    unsigned v, int eps,
                                    const ConstantTable& table);

// n = 2^a: sum (2k+1)^{2v+1} D_k = rho_v n (mod n^3), and the alternating
// sum = rhot_v n^2 (mod n^3).
CongruenceReport verify_theorem_1_3(unsigned a, unsigned v, int eps,
                                    const ConstantTable& table);

// Observation-only variant for n not a power of 2; never fails.
CongruenceReport explore_theorem_1_3(unsigned long n, unsigned v, int eps,
                                     const ConstantTable& table);

enum class Power2Lemma { D2a, D2aPlus1, D2aMinus1, S2a, SchroderIdentity };

CongruenceReport verify_power2_lemma(unsigned a, Power2Lemma which);
std::vector<CongruenceReport> verify_power2_lemmas(unsigned a);

// sum_{k<p} T_k(b,c) m^{-k} = ((m-b)^2 - 4c | p) mod p.
CongruenceReport verify_sun_trinomial(const BigInt& p, const BigInt& b,
                                      const BigInt& c, const BigInt& m);

struct SweepSpec {
  std::string claim;  // thm1.1 | thm1.2 | thm1.3 | power2 | trinomial | all
  std::vector<long> n_range, z_range, v_range, a_range, p_range, b_range,
      c_range, m_range;
  std::vector<int> eps_range;
  bool exploratory = false;

  // The desk-scale default parameter ranges for one claim.
  static SweepSpec defaults(const std::string& claim);
};

struct SweepResult {
  std::vector<CongruenceReport> reports;
  size_t verified = 0, failed = 0, not_applicable = 0, exploratory = 0;

  bool any_failed() const { return failed > 0; }
  std::string summary() const;
};

// Runs every parameter tuple of the spec; report order is the sorted tuple
// enumeration order regardless of the parallelism level.
SweepResult run_sweep(const SweepSpec& spec, unsigned jobs,
                      const ConstantTable& table);

}  // namespace partible
