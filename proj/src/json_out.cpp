#include "csq/json_out.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace csq::json {

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

Json complex(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json matrix(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json rr = Json::array();
    Json ir = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ir.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  Json j;
  j["dim"] = m.rows();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix parse_matrix(const Json& j) {
  try {
    const auto n = j.at("dim").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != n || im.size() != n) throw InvalidArgument("matrix JSON: row count differs from dim");
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (re[r].size() != n || im[r].size() != n) throw InvalidArgument("matrix JSON: column count differs from dim");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex{re[r][c].get<double>(), im[r][c].get<double>()};
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("matrix JSON: ") + e.what());
  }
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool all_scalar(const Json& j) {
  for (const auto& e : j)
    if (!is_scalar(e)) return false;
  return true;
}

void emit(std::ostream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        emit(os, it.value(), depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      if (all_scalar(j)) {
        os << "[";
        bool first = true;
        for (const auto& e : j) {
          if (!first) os << ", ";
          first = false;
          emit(os, e, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        emit(os, e, depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_number(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

void write(std::ostream& os, const Json& j) {
  emit(os, j, 0);
  os << "\n";
}

std::string dump(const Json& j) {
  std::ostringstream os;
  write(os, j);
  return os.str();
}

}  // namespace csq::json
