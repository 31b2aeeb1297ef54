#include "qwl/formulas.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "qwl/embedding.hpp"
#include "qwl/error.hpp"
#include "qwl/qcube.hpp"

namespace qwl {

namespace {

void require_n(int n) {
  if (n < 2) throw DomainError("wirelength formulas need n >= 2 (got " + std::to_string(n) + ")");
  if (n > 30) throw DomainError("n too large for 64-bit wirelength arithmetic");
}

}  // namespace

std::int64_t wl_cylinder(int n) {
  require_n(n);
  const auto m = pow3(n - 1);
  return m * (2 * (m - 1) + 3);
}

std::int64_t wl_caterpillar(int n) {
  require_n(n);
  const auto m = pow3(n - 1);
  return 2 * m * (m - 1) + 4 * n * m;
}

std::int64_t wl_firecracker(int n) {
  require_n(n);
  const auto m = pow3(n - 1);
  return 2 * m * ((m - 1) + (2 * n - 1) + n);
}

std::int64_t wl_banana(int n) {
  require_n(n);
  const auto half_up = (pow3(n) + 1) / 2;
  return 4 * n * (half_up - 3) + 4 * (half_up - 2) + 4 * (half_up - 1);
}

std::int64_t wl_formula(HostKind kind, int n) {
  switch (kind) {
    case HostKind::cylinder: return wl_cylinder(n);
    case HostKind::caterpillar: return wl_caterpillar(n);
    case HostKind::firecracker: return wl_firecracker(n);
    case HostKind::banana: return wl_banana(n);
  }
  throw PreconditionError("unknown host kind");
}

std::int64_t spine_cut_sum(int n) {
  require_n(n);
  const auto m = pow3(n - 1);
  std::int64_t sum = 0;
  for (std::int64_t i = 1; i < m; ++i) sum += 2 * n * 3 * i - 2 * iso_closed_form(3 * i, n);
  return sum;
}

namespace {

WirelengthRecord evaluate(HostKind kind, int n) {
  WirelengthRecord record{kind, n, {}, {}, {}, false, {}};
  try {
    const auto host = build_host(kind, n);
    const auto guest = build_qcube(n);
    record.formula = wl_formula(kind, n);
    const auto lex = lex_embedding(guest, host);
    record.distance = wirelength_by_distance(lex);
    record.cuts = wirelength_by_cuts(lex, host.cut_family);
    record.agree = *record.formula == *record.distance && *record.formula == *record.cuts;
  } catch (const Error& e) {
    record.error = e.what();
    record.agree = false;
  }
  return record;
}

}  // namespace

std::vector<WirelengthRecord> cross_check(int n, std::span<const HostKind> kinds,
                                          unsigned threads) {
  std::vector<WirelengthRecord> out;
  if (threads <= 1) {
    for (HostKind kind : kinds) out.push_back(evaluate(kind, n));
    return out;
  }
  std::vector<std::future<WirelengthRecord>> pending;
  for (std::size_t i = 0; i < kinds.size(); i += threads) {
    const std::size_t end = std::min(kinds.size(), i + threads);
    for (std::size_t j = i; j < end; ++j) {
      pending.push_back(std::async(std::launch::async, evaluate, kinds[j], n));
    }
    for (auto& f : pending) out.push_back(f.get());
    pending.clear();
  }
  return out;
}

std::string to_csv(std::span<const WirelengthRecord> records) {
  auto cell = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  std::ostringstream out;
  out << "host,n,formula,cuts,distance,agree\n";
  for (const auto& r : records) {
    out << to_string(r.kind) << ',' << r.n << ',' << cell(r.formula) << ',' << cell(r.cuts)
        << ',' << cell(r.distance) << ',' << (r.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace qwl
