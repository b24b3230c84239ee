#include "montes/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace montes {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

Report factor(const FactorRequest& req) {
  Report rep;
  Options opt = req.opt;
  opt.generators = req.generators;
  auto t0 = Clock::now();
  rep.result = run(req.poly, req.p, opt);
  if (req.timings) rep.timings_ms["run"] = ms_since(t0);
  if (req.disc) {
    auto t1 = Clock::now();
    Integer d = discriminant(req.poly);
    rep.disc_valuation = static_cast<std::int64_t>(pval(d, req.p));
    if (req.timings) rep.timings_ms["disc"] = ms_since(t1);
  }
  return rep;
}

std::string to_json(const Report& r, bool with_disc) {
  nlohmann::ordered_json j;
  j["prime"] = r.result.p.get_str();
  j["degree"] = r.result.f.degree();
  j["index"] = r.result.index;
  if (with_disc) {
    if (r.disc_valuation) {
      j["disc_valuation"] = *r.disc_valuation;
      j["field_disc_valuation"] = *r.disc_valuation - 2 * r.result.index;
    } else {
      j["disc_valuation"] = nullptr;
      j["field_disc_valuation"] = nullptr;
    }
  }
  nlohmann::ordered_json primes = nlohmann::ordered_json::array();
  for (const auto& q : r.result.primes) {
    nlohmann::ordered_json e;
    e["e"] = q.e;
    e["f"] = q.f;
    if (q.generator) {
      nlohmann::ordered_json num = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < q.generator->num.size(); ++i) num.push_back(q.generator->num[i].get_str());
      e["generator"] = {{"num", num}, {"p_power", q.generator->p_power}};
    } else {
      e["generator"] = nullptr;
    }
    primes.push_back(std::move(e));
  }
  j["primes"] = std::move(primes);
  nlohmann::ordered_json t = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.timings_ms) t[k] = v;
  j["timings_ms"] = std::move(t);
  return j.dump(2);
}

std::string to_text(const Report& r, bool with_disc) {
  std::ostringstream os;
  const auto& res = r.result;
  os << "prime " << res.p.get_str() << ", degree " << res.f.degree() << "\n";
  os << "index " << res.index << "\n";
  if (with_disc && r.disc_valuation) {
    os << "disc valuation " << *r.disc_valuation << "\n";
    os << "field disc valuation " << (*r.disc_valuation - 2 * res.index) << "\n";
  }
  os << res.primes.size() << (res.primes.size() == 1 ? " prime" : " primes") << "\n";
  for (std::size_t i = 0; i < res.primes.size(); ++i) {
    const auto& q = res.primes[i];
    os << "  P" << (i + 1) << ": e=" << q.e << " f=" << q.f;
    if (q.generator) {
      os << "  alpha = (" << q.generator->num.to_string() << ")";
      if (q.generator->p_power) os << "/" << res.p.get_str() << "^" << q.generator->p_power;
    }
    os << "\n";
  }
  for (const auto& [k, v] : r.timings_ms) os << "time " << k << " " << v << " ms\n";
  return os.str();
}

}  // namespace montes
