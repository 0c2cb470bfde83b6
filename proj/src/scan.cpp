#include "mordell/scan.hpp"

#include <atomic>
#include <thread>

#include "mordell/records.hpp"

namespace mordell {

namespace {

std::vector<FamilyParams> enumerate(const ScanConfig& config) {
  std::vector<FamilyParams> out;
  for (Integer a = config.a.lo; a <= config.a.hi; ++a) {
    for (Integer b = config.b.lo; b <= config.b.hi; ++b) {
      if (config.ordering == Ordering::NonDecreasing && b < a) continue;
      if (config.ordering == Ordering::Increasing && b <= a) continue;
      for (Integer c = config.c.lo; c <= config.c.hi; ++c) {
        if (config.ordering == Ordering::NonDecreasing && c < b) continue;
        if (config.ordering == Ordering::Increasing && c <= b) continue;
        if (a == 0 && b == 0 && c == 0) continue;
        out.emplace_back(a, b, c);
      }
    }
  }
  return out;
}

ScanRow evaluate(const FamilyParams& params, Precision precision) {
  ScanRow row{build_instance(params), std::nullopt, std::nullopt};
  if (row.instance.degenerate()) return row;
  try {
    row.heights = independence_verdict(*row.instance.curve, row.instance.points, precision);
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::string csv_join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::string flags_text(const FamilyInstance& inst) {
  std::string out;
  for (auto f : inst.flags) {
    if (!out.empty()) out += '|';
    out += to_string(f);
  }
  return out;
}

}  // namespace

ScanResult run_scan(const ScanConfig& config) {
  if (config.precision.digits == 0) throw InvalidArgument("scan precision must be positive");
  const auto params = enumerate(config);
  std::vector<std::optional<ScanRow>> slots(params.size());
  std::atomic<std::size_t> next{0};
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(params.size(), 1)));

  std::vector<std::exception_ptr> failures(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < params.size(); i = next++) {
        slots[i] = evaluate(params[i], config.precision);
      }
    } catch (...) {
      failures[id] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  ScanResult result;
  for (auto& slot : slots) {
    if (slot->instance.degenerate()) {
      result.degenerate.push_back(std::move(*slot));
    } else {
      result.rows.push_back(std::move(*slot));
    }
  }
  return result;
}

void write_scan(const ScanResult& result, OutputFormat format, unsigned digits, std::ostream& out) {
  if (format == OutputFormat::Json) {
    nlohmann::json rows = nlohmann::json::array(), degenerate = nlohmann::json::array();
    for (const auto& row : result.rows) {
      nlohmann::json r = to_json(row.instance);
      r["k_digits"] = to_string(Integer(abs(row.instance.k))).size();
      if (row.heights) r["heights"] = to_json(*row.heights);
      if (row.error) r["error"] = *row.error;
      rows.push_back(std::move(r));
    }
    for (const auto& row : result.degenerate) degenerate.push_back(to_json(row.instance));
    out << nlohmann::json{{"digits", digits}, {"instances", rows}, {"degenerate", degenerate}}.dump(2)
        << '\n';
    return;
  }
  out << "a,b,c,k,k_digits,x1,x2,x3,regulator,regulator_error,independent,error\n";
  for (const auto& row : result.rows) {
    const auto& inst = row.instance;
    std::vector<std::string> f{to_string(inst.params.a()), to_string(inst.params.b()),
                               to_string(inst.params.c()), to_string(inst.k),
                               std::to_string(to_string(Integer(abs(inst.k))).size())};
    for (const auto& p : inst.points) f.push_back(to_string(p.x()));
    if (row.heights) {
      f.push_back(row.heights->regulator.value.to_string(static_cast<int>(digits)));
      f.push_back(row.heights->regulator.error_bound.to_string_up(6));
      f.push_back(row.heights->independent ? "true" : "false");
    } else {
      f.insert(f.end(), {"", "", ""});
    }
    std::string err = row.error.value_or("");
    for (auto& ch : err) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    f.push_back(err);
    out << csv_join(f) << '\n';
  }
  out << "\n# degenerate\na,b,c,k,flags\n";
  for (const auto& row : result.degenerate) {
    const auto& inst = row.instance;
    out << csv_join({to_string(inst.params.a()), to_string(inst.params.b()), to_string(inst.params.c()),
                     to_string(inst.k), flags_text(inst)})
        << '\n';
  }
}

}  // namespace mordell
