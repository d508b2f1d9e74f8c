#include "ewl/game_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ewl/oracle.hpp"

namespace ewl {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw GameFileError("not a number: '" + token + "'");
    }
    if (pos != token.size()) throw GameFileError("trailing characters in number: '" + token + "'");
    return v;
}

}  // namespace

std::string outcome_label(int n_players, std::size_t index) {
    std::string label(static_cast<std::size_t>(n_players), 'N');
    for (int j = 0; j < n_players; ++j)
        if ((index >> (n_players - 1 - j)) & 1u) label[static_cast<std::size_t>(j)] = 'F';
    return label;
}

std::size_t outcome_index(const std::string& label) {
    if (label.empty()) throw GameFileError("empty outcome label");
    std::size_t idx = 0;
    for (const char c : label) {
        if (c != 'N' && c != 'F')
            throw GameFileError("outcome labels use only N and F: '" + label + "'");
        idx = (idx << 1) | (c == 'F' ? 1u : 0u);
    }
    return idx;
}

GameSpec parse_game_spec(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GameFileError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw GameFileError("game file must be a JSON object");
    if (!doc.contains("players") || !doc["players"].is_number_integer())
        throw GameFileError("game file needs an integer 'players' field");
    const int n = doc["players"].get<int>();
    if (n != 2 && n != 3) throw GameFileError("'players' must be 2 or 3");
    if (!doc.contains("payoffs") || !doc["payoffs"].is_object())
        throw GameFileError("game file needs a 'payoffs' object");

    const std::size_t expected = std::size_t{1} << n;
    const auto& table = doc["payoffs"];
    if (table.size() != expected) {
        std::ostringstream msg;
        msg << "expected " << expected << " outcome keys, found " << table.size();
        throw GameFileError(msg.str());
    }

    std::vector<std::vector<double>> payoffs(expected);
    std::vector<bool> seen(expected, false);
    for (const auto& [key, value] : table.items()) {
        if (key.size() != static_cast<std::size_t>(n))
            throw GameFileError("outcome key '" + key + "' has the wrong length");
        const std::size_t idx = outcome_index(key);
        if (seen[idx]) throw GameFileError("duplicate outcome key '" + key + "'");
        seen[idx] = true;
        if (!value.is_array() || value.size() != static_cast<std::size_t>(n))
            throw GameFileError("outcome '" + key + "' needs one payoff per player");
        std::vector<double> row;
        for (const auto& entry : value) {
            if (!entry.is_number())
                throw GameFileError("payoffs for '" + key + "' must be numbers");
            const double v = entry.get<double>();
            if (!std::isfinite(v)) throw GameFileError("payoffs must be finite");
            row.push_back(v);
        }
        payoffs[idx] = std::move(row);
    }

    GameSpec spec;
    spec.game = Game::create(n, std::move(payoffs));
    if (doc.contains("name") && doc["name"].is_string()) spec.name = doc["name"].get<std::string>();
    if (doc.contains("description") && doc["description"].is_string())
        spec.description = doc["description"].get<std::string>();
    return spec;
}

GameSpec load_game_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GameFileError("cannot open game file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game_spec(buf.str());
}

SU2Strategy parse_strategy(const std::string& raw, Complex eta, std::mt19937_64* rng) {
    const std::string token = trim(raw);
    if (token == "N") return SU2Strategy::no_flip();
    if (token == "F") return SU2Strategy::flip(eta);
    if (token == "random") {
        if (rng == nullptr) throw GameFileError("'random' is not allowed here");
        return haar_sample(*rng);
    }

    std::vector<double> parts;
    std::stringstream ss(token);
    std::string piece;
    while (std::getline(ss, piece, ',')) parts.push_back(parse_number(trim(piece)));
    if (parts.size() != 4)
        throw GameFileError("strategy must be N, F, random or a quadruple a0,a1,b0,b1");
    const SU2Strategy s{Complex(parts[0], parts[1]), Complex(parts[2], parts[3])};
    if (!is_unit(s))
        throw std::invalid_argument("strategy quadruple is not on the unit 3-sphere");
    return s;
}

MixedQuantumStrategy parse_mixture(const std::string& raw, Complex eta) {
    const std::string text = trim(raw);
    if (text == "haar") return MixedQuantumStrategy::haar_uniform();

    std::vector<std::string> comps;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, '+')) comps.push_back(trim(piece));
    if (comps.empty()) throw GameFileError("empty mixture description");

    std::vector<std::pair<double, SU2Strategy>> support;
    for (const std::string& comp : comps) {
        const auto colon = comp.find(':');
        double weight = 1.0;
        std::string token = comp;
        if (colon != std::string::npos) {
            weight = parse_number(trim(comp.substr(0, colon)));
            token = trim(comp.substr(colon + 1));
        } else if (comps.size() > 1) {
            throw GameFileError("mixture components need weights, e.g. 0.5:N+0.5:F");
        }
        if (token == "haar")
            throw GameFileError("'haar' cannot be combined with finite components");
        support.emplace_back(weight, parse_strategy(token, eta));
    }
    return MixedQuantumStrategy::mixture(std::move(support));
}

}  // namespace ewl
