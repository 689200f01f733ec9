#pragma once

// Defaults shared by the command-line front end.

#include <filesystem>
#include <string>
#include <vector>

#include "windsec/mc/campaign.hpp"

namespace windsec::experiment {

inline constexpr const char* kOutDirEnv = "WINDSEC_OUT";

// $WINDSEC_OUT if set and non-empty, else "windsec_out".
std::filesystem::path default_out_dir();

// n_steps 1e5, 2000 events, m in {4, 8, ..., 128}.
mc::CampaignConfig desk_scale_config();
// n_steps 1e6, 10^4 events, m in {4, 8, ..., 1024}.
mc::CampaignConfig full_scale_config();

// "4,8,16" -> {4, 8, 16}; throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace windsec::experiment
