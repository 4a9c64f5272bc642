#include "partible/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <thread>

#include "json.hpp"

namespace partible {

const char* status_str(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "FAILED";
    case Status::NotApplicable: return "not-applicable";
    case Status::Exploratory: return "exploratory";
  }
  return "?";
}

std::string report_json_line(const CongruenceReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["status"] = status_str(r.status);
  j["lhs"] = r.lhs.get_str();
  j["rhs"] = r.rhs.get_str();
  j["modulus"] = r.modulus.get_str();
  return j.dump();
}

std::string report_csv_row(const CongruenceReport& r) {
  std::string params;
  for (const auto& [k, v] : r.params) {
    if (!params.empty()) params += ";";
    params += k + "=" + v;
  }
  return r.claim + "," + params + "," + status_str(r.status) + "," +
         r.lhs.get_str() + "," + r.rhs.get_str() + "," + r.modulus.get_str();
}

std::string report_text_line(const CongruenceReport& r) {
  std::string out = r.claim;
  for (const auto& [k, v] : r.params) out += " " + k + "=" + v;
  out += std::string(" status=") + status_str(r.status);
  out += " lhs=" + r.lhs.get_str() + " rhs=" + r.rhs.get_str() +
         " mod=" + r.modulus.get_str();
  return out;
}

BigInt sum_weighted(unsigned long n, unsigned v, int eps, const BigInt& z,
                    bool odd_power, const BigInt& modulus) {
  if (n < 1) throw std::invalid_argument("sum_weighted: n must be >= 1");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("sum_weighted: eps must be +1 or -1");
  if (modulus < 1) throw std::invalid_argument("sum_weighted: modulus >= 1");
  const unsigned long power = 2UL * v + (odd_power ? 1 : 0);
  TrinomialStream d = delannoy_int_stream(z);
  BigInt sum = 0;
  for (unsigned long k = 0; k < n; ++k) {
    BigInt w = mod_pow(BigInt(2 * k + 1), BigInt(power), modulus);
    BigInt term = mod_reduce(w * mod_reduce(d.value(), modulus), modulus);
    if (eps == -1 && (k & 1UL))
      sum = mod_reduce(sum - term, modulus);
    else
      sum = mod_reduce(sum + term, modulus);
    d.advance();
  }
  return sum;
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

CongruenceReport make_report(std::string claim, Params params, Status st,
                             BigInt lhs, BigInt rhs, BigInt modulus) {
  CongruenceReport r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.status = st;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.modulus = std::move(modulus);
  return r;
}

std::string str(const BigInt& x) { return x.get_str(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

CongruenceReport verify_theorem_1_1(unsigned long n, const BigInt& z,
                                    unsigned v, int eps,
                                    const ConstantTable& table) {
  if (n < 1) throw std::invalid_argument("verify_theorem_1_1: n >= 1");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("verify_theorem_1_1: eps must be +1 or -1");
  if (v > table.vmax)
    throw std::invalid_argument("verify_theorem_1_1: v beyond table");
  Params params{{"n", std::to_string(n)},
                {"z", str(z)},
                {"v", std::to_string(v)},
                {"eps", std::to_string(eps)}};
  BigInt nn(n);
  if (z == 0 || z == -1)
    return make_report("thm1.1", params, Status::NotApplicable, 0, 0, nn);
  BigInt base = (eps == 1) ? z : z + 1;
  if (gcd(nn, 2 * base) != 1)
    return make_report("thm1.1", params, Status::NotApplicable, 0, 0, nn);
  const ZPoly& cleared = (eps == 1) ? table.c_cleared[v] : table.ct_cleared[v];
  BigInt lhs = mod_reduce(
      mod_pow(base, BigInt(v), nn) * sum_weighted(n, v, eps, z, false, nn),
      nn);
  BigInt plain = sum_weighted(n, 0, eps, z, false, nn);
  BigInt rhs = mod_reduce(zpoly_eval_mod(cleared, z, nn) * plain, nn);
  return make_report("thm1.1", params,
                     lhs == rhs ? Status::Verified : Status::Failed, lhs, rhs,
                     nn);
}

CongruenceReport verify_theorem_1_2(const BigInt& p, const BigInt& z,
                                    unsigned v, int eps,
                                    const ConstantTable& table) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
    throw std::invalid_argument("verify_theorem_1_2: p must be an odd prime");
  if (!p.fits_ulong_p())
    throw std::invalid_argument("verify_theorem_1_2: p too large to sweep");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("verify_theorem_1_2: eps must be +1 or -1");
  if (v > table.vmax)
    throw std::invalid_argument("verify_theorem_1_2: v beyond table");
  Params params{{"p", str(p)},
                {"z", str(z)},
                {"v", std::to_string(v)},
                {"eps", std::to_string(eps)}};
  if (z == 0 || z == -1)
    return make_report("thm1.2", params, Status::NotApplicable, 0, 0, p);
  BigInt base = (eps == 1) ? z : z + 1;
  if (gcd(p, base) != 1)
    return make_report("thm1.2", params, Status::NotApplicable, 0, 0, p);
  const ZPoly& cleared = (eps == 1) ? table.c_cleared[v] : table.ct_cleared[v];
  int symbol = legendre((eps == 1) ? BigInt(-z) : BigInt(z + 1), p);
  BigInt lhs = mod_reduce(mod_pow(base, BigInt(v), p) *
                              sum_weighted(p.get_ui(), v, eps, z, false, p),
                          p);
  BigInt rhs = mod_reduce(zpoly_eval_mod(cleared, z, p) * BigInt(symbol), p);
  return make_report("thm1.2", params,
                     lhs == rhs ? Status::Verified : Status::Failed, lhs, rhs,
                     p);
}

CongruenceReport verify_theorem_1_3(unsigned a, unsigned v, int eps,
                                    const ConstantTable& table) {
  if (a < 1) throw std::invalid_argument("verify_theorem_1_3: a >= 1");
  if (a > 32) throw std::invalid_argument("verify_theorem_1_3: a > 32");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("verify_theorem_1_3: eps must be +1 or -1");
  if (v > table.vmax)
    throw std::invalid_argument("verify_theorem_1_3: v beyond table");
  Params params{{"a", std::to_string(a)},
                {"v", std::to_string(v)},
                {"eps", std::to_string(eps)}};
  BigInt n = BigInt(1) << a;
  BigInt modulus = BigInt(1) << (3 * a);
  BigInt lhs = sum_weighted(1UL << a, v, eps, 1, true, modulus);
  BigInt rhs = (eps == 1) ? mod_reduce(table.rho[v] * n, modulus)
                          : mod_reduce(table.rhot[v] * n * n, modulus);
  return make_report("thm1.3", params,
                     lhs == rhs ? Status::Verified : Status::Failed, lhs, rhs,
                     modulus);
}

CongruenceReport explore_theorem_1_3(unsigned long n, unsigned v, int eps,
                                     const ConstantTable& table) {
  if (n < 1) throw std::invalid_argument("explore_theorem_1_3: n >= 1");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("explore_theorem_1_3: eps must be +1 or -1");
  if (v > table.vmax)
    throw std::invalid_argument("explore_theorem_1_3: v beyond table");
  Params params{{"n", std::to_string(n)},
                {"v", std::to_string(v)},
                {"eps", std::to_string(eps)}};
  BigInt nn(n);
  BigInt modulus = nn * nn * nn;
  BigInt lhs = sum_weighted(n, v, eps, 1, true, modulus);
  BigInt rhs = (eps == 1) ? mod_reduce(table.rho[v] * nn, modulus)
                          : mod_reduce(table.rhot[v] * nn * nn, modulus);
  return make_report("thm1.3", params, Status::Exploratory, lhs, rhs, modulus);
}

namespace {

struct Power2Values {
  BigInt d_minus, d, d_plus, s;  // D_{2^a-1}, D_{2^a}, D_{2^a+1}, S_{2^a}
};

Power2Values power2_values(unsigned a) {
  unsigned long n = 1UL << a;
  TrinomialStream ds = delannoy_int_stream(1);
  Power2Values out;
  while (ds.index() <= n + 1) {
    if (ds.index() == n - 1) out.d_minus = ds.value();
    if (ds.index() == n) out.d = ds.value();
    if (ds.index() == n + 1) {
      out.d_plus = ds.value();
      break;
    }
    ds.advance();
  }
  // S_n(1) = (D_{n+1} - D_{n-1}) / (2(2n+1))
  BigInt num = out.d_plus - out.d_minus;
  BigInt den = 2 * (2 * BigInt(n) + 1);
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0)
    throw std::logic_error("power2_values: Schroder division not exact");
  out.s = q;
  return out;
}

const char* lemma_name(Power2Lemma which) {
  switch (which) {
    case Power2Lemma::D2a: return "D2a";
    case Power2Lemma::D2aPlus1: return "D2a+1";
    case Power2Lemma::D2aMinus1: return "D2a-1";
    case Power2Lemma::S2a: return "S2a";
    case Power2Lemma::SchroderIdentity: return "DnSn";
  }
  return "?";
}

}  // namespace

CongruenceReport verify_power2_lemma(unsigned a, Power2Lemma which) {
  if (a < 2) throw std::invalid_argument("verify_power2_lemma: a >= 2");
  if (a > 32) throw std::invalid_argument("verify_power2_lemma: a > 32");
  Params params{{"a", std::to_string(a)},
                {"lemma", lemma_name(which)}};
  Power2Values vals = power2_values(a);
  BigInt mod4 = BigInt(1) << (2 * a + 2);   // 4^{a+1}
  BigInt mod2 = BigInt(1) << (2 * a + 1);   // 2^{2a+1}
  BigInt lhs, rhs, modulus;
  switch (which) {
    case Power2Lemma::D2a:
      modulus = mod4;
      lhs = mod_reduce(vals.d, modulus);
      rhs = 1;
      break;
    case Power2Lemma::D2aPlus1:
      modulus = mod4;
      lhs = mod_reduce(vals.d_plus, modulus);
      rhs = mod_reduce(3 + (BigInt(1) << (a + 2)), modulus);
      break;
    case Power2Lemma::D2aMinus1:
      modulus = mod4;
      lhs = mod_reduce(vals.d_minus, modulus);
      rhs = mod_reduce(BigInt(-1), modulus);
      break;
    case Power2Lemma::S2a:
      modulus = mod2;
      lhs = mod_reduce(vals.s, modulus);
      rhs = mod_reduce(2 - (BigInt(1) << (a + 1)), modulus);
      break;
    case Power2Lemma::SchroderIdentity: {
      // exact: D_{2^a-1} = D_{2^a+1} - 2(2^{a+1}+1) S_{2^a}
      modulus = 0;
      BigInt expect = vals.d_plus - 2 * ((BigInt(1) << (a + 1)) + 1) * vals.s;
      lhs = vals.d_minus - expect;
      rhs = 0;
      break;
    }
  }
  return make_report("power2", params,
                     lhs == rhs ? Status::Verified : Status::Failed, lhs, rhs,
                     modulus);
}

std::vector<CongruenceReport> verify_power2_lemmas(unsigned a) {
  std::vector<CongruenceReport> out;
  for (Power2Lemma which :
       {Power2Lemma::D2a, Power2Lemma::D2aPlus1, Power2Lemma::D2aMinus1,
        Power2Lemma::S2a, Power2Lemma::SchroderIdentity})
    out.push_back(verify_power2_lemma(a, which));
  return out;
}

CongruenceReport verify_sun_trinomial(const BigInt& p, const BigInt& b,
                                      const BigInt& c, const BigInt& m) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
    throw std::invalid_argument("verify_sun_trinomial: p must be an odd prime");
  Params params{{"p", str(p)}, {"b", str(b)}, {"c", str(c)}, {"m", str(m)}};
  if (!p.fits_ulong_p())
    throw std::invalid_argument("verify_sun_trinomial: p too large to sweep");
  if (gcd(m, p) != 1)
    return make_report("trinomial", params, Status::NotApplicable, 0, 0, p);
  BigInt minv = mod_pow(mod_reduce(m, p), p - 2, p);
  TrinomialStream t(b, c);
  BigInt sum = 0, mk = 1;  // mk = m^{-k} mod p
  unsigned long pl = p.get_ui();
  for (unsigned long k = 0; k < pl; ++k) {
    sum = mod_reduce(sum + mk * mod_reduce(t.value(), p), p);
    mk = mod_reduce(mk * minv, p);
    t.advance();
  }
  BigInt disc = (m - b) * (m - b) - 4 * c;
  BigInt rhs = mod_reduce(BigInt(legendre(disc, p)), p);
  return make_report("trinomial", params,
                     sum == rhs ? Status::Verified : Status::Failed, sum, rhs,
                     p);
}

namespace {

std::vector<long> sorted_unique(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> v;
  for (long x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

std::vector<long> odd_range(long lo, long hi) {
  std::vector<long> v;
  for (long x = lo; x <= hi; ++x)
    if (x % 2 != 0) v.push_back(x);
  return v;
}

std::vector<long> nonspecial_z(long lo, long hi) {
  std::vector<long> v;
  for (long x = lo; x <= hi; ++x)
    if (x != 0 && x != -1) v.push_back(x);
  return v;
}

}  // namespace

SweepSpec SweepSpec::defaults(const std::string& claim) {
  SweepSpec s;
  s.claim = claim;
  s.eps_range = {1, -1};
  if (claim == "thm1.1") {
    s.n_range = odd_range(1, 99);
    s.z_range = nonspecial_z(-6, 6);
    s.v_range = range(0, 5);
  } else if (claim == "thm1.2") {
    s.p_range = range(3, 199);
    s.z_range = nonspecial_z(-10, 10);
    s.v_range = range(0, 5);
  } else if (claim == "thm1.3") {
    s.a_range = range(1, 12);
    s.v_range = range(0, 4);
  } else if (claim == "power2") {
    s.a_range = range(2, 14);
  } else if (claim == "trinomial") {
    s.p_range = range(3, 97);
    s.b_range = range(-3, 3);
    s.c_range = range(-3, 3);
    s.m_range = {-2, -1, 1, 2, 3};
  } else if (claim == "all") {
    // handled by run_sweep expansion
  } else {
    throw std::invalid_argument("unknown claim: " + claim);
  }
  return s;
}

namespace {

using TaskList = std::vector<std::function<CongruenceReport()>>;

void require_domain(const std::vector<long>& values, long lo, long hi,
                    const char* what) {
  for (long x : values)
    if (x < lo || x > hi)
      throw std::invalid_argument(std::string(what) + " out of range [" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]: " +
                                  std::to_string(x));
}

void enumerate_tasks(const SweepSpec& spec, const ConstantTable& table,
                     TaskList& tasks) {
  const auto eps_list = spec.eps_range.empty() ? std::vector<int>{1, -1}
                                               : spec.eps_range;
  if (spec.claim == "all") {
    for (const char* c : {"thm1.1", "thm1.2", "thm1.3", "power2", "trinomial"})
      enumerate_tasks(SweepSpec::defaults(c), table, tasks);
    return;
  }
  long vmax = static_cast<long>(table.vmax);
  if (spec.claim == "thm1.1") {
    require_domain(spec.n_range, 1, std::numeric_limits<long>::max(), "n");
    require_domain(spec.v_range, 0, vmax, "v");
    for (long n : sorted_unique(spec.n_range))
      for (long z : sorted_unique(spec.z_range))
        for (long v : sorted_unique(spec.v_range))
          for (int eps : eps_list)
            tasks.push_back([=, &table] {
              return verify_theorem_1_1(static_cast<unsigned long>(n),
                                        BigInt(z), static_cast<unsigned>(v),
                                        eps, table);
            });
  } else if (spec.claim == "thm1.2") {
    require_domain(spec.v_range, 0, vmax, "v");
    for (long p : sorted_unique(spec.p_range)) {
      if (p < 3 || !is_prime(BigInt(p))) continue;
      for (long z : sorted_unique(spec.z_range))
        for (long v : sorted_unique(spec.v_range))
          for (int eps : eps_list)
            tasks.push_back([=, &table] {
              return verify_theorem_1_2(BigInt(p), BigInt(z),
                                        static_cast<unsigned>(v), eps, table);
            });
    }
  } else if (spec.claim == "thm1.3") {
    require_domain(spec.v_range, 0, vmax, "v");
    if (spec.exploratory) {
      require_domain(spec.n_range, 1, std::numeric_limits<long>::max(), "n");
      for (long n : sorted_unique(spec.n_range))
        for (long v : sorted_unique(spec.v_range))
          for (int eps : eps_list)
            tasks.push_back([=, &table] {
              return explore_theorem_1_3(static_cast<unsigned long>(n),
                                         static_cast<unsigned>(v), eps, table);
            });
    } else {
      require_domain(spec.a_range, 1, 32, "a");
      for (long a : sorted_unique(spec.a_range))
        for (long v : sorted_unique(spec.v_range))
          for (int eps : eps_list)
            tasks.push_back([=, &table] {
              return verify_theorem_1_3(static_cast<unsigned>(a),
                                        static_cast<unsigned>(v), eps, table);
            });
    }
  } else if (spec.claim == "power2") {
    require_domain(spec.a_range, 2, 32, "a");
    for (long a : sorted_unique(spec.a_range))
      for (Power2Lemma which :
           {Power2Lemma::D2a, Power2Lemma::D2aPlus1, Power2Lemma::D2aMinus1,
            Power2Lemma::S2a, Power2Lemma::SchroderIdentity})
        tasks.push_back(
            [=] { return verify_power2_lemma(static_cast<unsigned>(a), which); });
  } else if (spec.claim == "trinomial") {
    for (long p : sorted_unique(spec.p_range)) {
      if (p < 3 || !is_prime(BigInt(p))) continue;
      for (long b : sorted_unique(spec.b_range))
        for (long c : sorted_unique(spec.c_range))
          for (long m : sorted_unique(spec.m_range))
            tasks.push_back([=] {
              return verify_sun_trinomial(BigInt(p), BigInt(b), BigInt(c),
                                          BigInt(m));
            });
    }
  } else {
    throw std::invalid_argument("unknown claim: " + spec.claim);
  }
}

}  // namespace

std::string SweepResult::summary() const {
  std::string s = "verified=" + std::to_string(verified) +
                  " failed=" + std::to_string(failed) +
                  " na=" + std::to_string(not_applicable);
  if (exploratory > 0) s += " exploratory=" + std::to_string(exploratory);
  return s;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned jobs,
                      const ConstantTable& table) {
  TaskList tasks;
  enumerate_tasks(spec, table, tasks);
  SweepResult result;
  result.reports.resize(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        result.reports[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
      result.reports[i].wall_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
    }
  };
  if (jobs <= 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    unsigned count = std::min<size_t>(jobs, tasks.size());
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  for (const CongruenceReport& r : result.reports) {
    switch (r.status) {
      case Status::Verified: ++result.verified; break;
      case Status::Failed: ++result.failed; break;
      case Status::NotApplicable: ++result.not_applicable; break;
      case Status::Exploratory: ++result.exploratory; break;
    }
  }
  return result;
}

}  // namespace partible
