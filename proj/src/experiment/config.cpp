#include "windsec/experiment/config.hpp"

#include <cstdlib>
#include <stdexcept>

namespace windsec::experiment {

std::filesystem::path default_out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  return env && *env ? std::filesystem::path(env) : std::filesystem::path("windsec_out");
}

mc::CampaignConfig desk_scale_config() {
  mc::CampaignConfig c;
  c.m_values = {4, 8, 16, 32, 64, 128};
  c.n_steps = 100000;
  c.n_events = 2000;
  return c;
}

mc::CampaignConfig full_scale_config() {
  mc::CampaignConfig c;
  c.m_values = {4, 8, 16, 32, 64, 128, 256, 512, 1024};
  c.n_steps = 1000000;
  c.n_events = 10000;
  return c;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const std::string item = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer list: '" + text + "'");
    out.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace windsec::experiment
