#include "ecosim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace ecosim {

namespace {

enum class FieldKind { integer, real, mode };

struct FieldDef {
    std::string_view name;  // canonical long name
    std::string_view alias; // classic short alias; empty if none
    FieldKind kind;
    int SimParams::* int_member = nullptr;
    double SimParams::* real_member = nullptr;
    PriceMode SimParams::* mode_member = nullptr;
};

constexpr FieldDef kFields[] = {
    {"n_agents", "N", FieldKind::integer, &SimParams::n_agents, nullptr, nullptr},
    {"weeks", "W", FieldKind::integer, &SimParams::weeks, nullptr, nullptr},
    {"weekly_transactions", "T", FieldKind::integer, &SimParams::weekly_transactions, nullptr, nullptr},
    {"loan_rate_weekly", "rl", FieldKind::real, nullptr, &SimParams::loan_rate_weekly, nullptr},
    {"deposit_rate_weekly", "rd", FieldKind::real, nullptr, &SimParams::deposit_rate_weekly, nullptr},
    {"tax_rate", "tax", FieldKind::real, nullptr, &SimParams::tax_rate, nullptr},
    {"spend_taxes_multiple", "spendtaxes", FieldKind::real, nullptr, &SimParams::spend_taxes_multiple, nullptr},
    {"banker_spend_fraction", "spend", FieldKind::real, nullptr, &SimParams::banker_spend_fraction, nullptr},
    {"mood_odds", "mood", FieldKind::integer, &SimParams::mood_odds, nullptr, nullptr},
    {"default_limit", "defaultlimit", FieldKind::real, nullptr, &SimParams::default_limit, nullptr},
    {"loan_limit", "loanlimit", FieldKind::real, nullptr, &SimParams::loan_limit, nullptr},
    {"initial_reserves", "", FieldKind::real, nullptr, &SimParams::initial_reserves, nullptr},
    {"reserve_ratio", "", FieldKind::real, nullptr, &SimParams::reserve_ratio, nullptr},
    {"purchase_hours", "", FieldKind::real, nullptr, &SimParams::purchase_hours, nullptr},
    {"price_per_hour", "", FieldKind::real, nullptr, &SimParams::price_per_hour, nullptr},
    {"midband_buy_odds", "", FieldKind::integer, &SimParams::midband_buy_odds, nullptr, nullptr},
    {"upper_threshold", "", FieldKind::real, nullptr, &SimParams::upper_threshold, nullptr},
    {"tax_seller_share", "", FieldKind::real, nullptr, &SimParams::tax_seller_share, nullptr},
    {"price_mode", "", FieldKind::mode, nullptr, nullptr, &SimParams::price_mode},
    {"k_slope", "", FieldKind::real, nullptr, &SimParams::k_slope, nullptr},
    {"e_sensitivity", "", FieldKind::real, nullptr, &SimParams::e_sensitivity, nullptr},
};

const FieldDef* find_field(std::string_view key) {
    for (const FieldDef& field : kFields) {
        if (key == field.name || (!field.alias.empty() && key == field.alias)) return &field;
    }
    return nullptr;
}

PriceMode parse_mode(const std::string& key, const std::string& text) {
    if (text == "fixed") return PriceMode::fixed;
    if (text == "market") return PriceMode::market;
    throw ConfigError("parameter \"" + key + "\": expected \"fixed\" or \"market\", got \"" + text + "\"");
}

void set_from_json(SimParams& params, const FieldDef& field, const std::string& key,
                   const nlohmann::json& value) {
    switch (field.kind) {
        case FieldKind::integer:
            if (!value.is_number_integer()) {
                throw ConfigError("parameter \"" + key + "\": expected an integer, got " + value.dump());
            }
            params.*(field.int_member) = value.get<int>();
            break;
        case FieldKind::real:
            if (!value.is_number()) {
                throw ConfigError("parameter \"" + key + "\": expected a number, got " + value.dump());
            }
            params.*(field.real_member) = value.get<double>();
            break;
        case FieldKind::mode:
            if (!value.is_string()) {
                throw ConfigError("parameter \"" + key + "\": expected a string, got " + value.dump());
            }
            params.*(field.mode_member) = parse_mode(key, value.get<std::string>());
            break;
    }
}

bool whitespace_only(const std::string& text) {
    return std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

SimParams load_config(const std::string& text) {
    SimParams params;
    if (whitespace_only(text)) return params;

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& error) {
        throw ConfigError(std::string("config is not valid JSON: ") + error.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a flat JSON object of parameter key/value pairs");
    }

    std::set<std::string_view> assigned;
    for (const auto& [key, value] : doc.items()) {
        const FieldDef* field = find_field(key);
        if (field == nullptr) throw ConfigError("unknown parameter \"" + key + "\"");
        if (!assigned.insert(field->name).second) {
            throw ConfigError("parameter \"" + std::string(field->name) +
                              "\" given more than once (long name and alias)");
        }
        set_from_json(params, *field, key, value);
    }
    validate_or_throw(params);
    return params;
}

SimParams load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return load_config(buffer.str());
    } catch (const ConfigError& error) {
        throw ConfigError(path.string() + ": " + error.what());
    } catch (const ValidationError& error) {
        throw ConfigError(path.string() + ": " + error.what());
    }
}

std::string serialize_params(const SimParams& params) {
    nlohmann::json doc;
    for (const FieldDef& field : kFields) {
        const std::string name(field.name);
        switch (field.kind) {
            case FieldKind::integer: doc[name] = params.*(field.int_member); break;
            case FieldKind::real: doc[name] = params.*(field.real_member); break;
            case FieldKind::mode: doc[name] = to_string(params.*(field.mode_member)); break;
        }
    }
    return doc.dump(2) + "\n";
}

void apply_override(SimParams& params, const std::string& key, const std::string& value) {
    const FieldDef* field = find_field(key);
    if (field == nullptr) throw ConfigError("unknown parameter \"" + key + "\"");
    switch (field->kind) {
        case FieldKind::integer: {
            int parsed = 0;
            const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
            if (ec != std::errc{} || end != value.data() + value.size()) {
                throw ConfigError("parameter \"" + key + "\": expected an integer, got \"" + value + "\"");
            }
            params.*(field->int_member) = parsed;
            break;
        }
        case FieldKind::real: {
            double parsed = 0.0;
            const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
            if (ec != std::errc{} || end != value.data() + value.size()) {
                throw ConfigError("parameter \"" + key + "\": expected a number, got \"" + value + "\"");
            }
            params.*(field->real_member) = parsed;
            break;
        }
        case FieldKind::mode:
            params.*(field->mode_member) = parse_mode(key, value);
            break;
    }
}

} // namespace ecosim
