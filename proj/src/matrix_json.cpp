#include "sun_euler/matrix_json.hpp"

#include <charconv>
#include <sstream>

namespace sun {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const auto rows = static_cast<Eigen::Index>(re.size());
  if (rows == 0 || im.size() != re.size()) throw Error(ErrorCode::InvalidArgument, "malformed matrix JSON");
  const auto cols = static_cast<Eigen::Index>(re[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (re[r].size() != static_cast<std::size_t>(cols) || im[r].size() != static_cast<std::size_t>(cols)) {
      throw Error(ErrorCode::InvalidArgument, "ragged matrix JSON");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
  }
  return m;
}

nlohmann::json generator_to_json(const GeneratorSet& gs, int index) {
  if (index < 1 || index > gs.size()) {
    throw Error(ErrorCode::InvalidArgument, "generator index " + std::to_string(index) + " outside 1.." +
                                                std::to_string(gs.size()));
  }
  nlohmann::json j = matrix_to_json(gs[index]);
  j["n"] = gs.n();
  j["index"] = index;
  return j;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::InvalidArgument, "empty entry in list '" + text + "'");
    const std::string token = item.substr(first, last - first + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidArgument, "not a number: '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty number list");
  return out;
}

}  // namespace sun
