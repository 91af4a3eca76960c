#include "entgraph/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entgraph/errors.hpp"

namespace entgraph {

namespace {

using json = nlohmann::ordered_json;

json amplitudes_to_json(const std::vector<cplx>& amps) {
    json arr = json::array();
    for (const cplx& a : amps) {
        arr.push_back(json::array({a.real(), a.imag()}));
    }
    return arr;
}

std::vector<cplx> amplitudes_from_json(const json& arr) {
    if (!arr.is_array()) {
        throw parse_error("\"amplitudes\" must be an array of [re, im] pairs");
    }
    std::vector<cplx> amps;
    amps.reserve(arr.size());
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw parse_error("amplitude entries must be [re, im] number pairs");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return amps;
}

int qubit_count_from_json(const json& doc) {
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
        throw parse_error("missing integer \"n_qubits\"");
    }
    return doc["n_qubits"].get<int>();
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw parse_error("invalid JSON document");
    }
    return doc;
}

StateVector state_from_document(const json& doc) {
    const int n = qubit_count_from_json(doc);
    if (!doc.contains("amplitudes")) {
        throw parse_error("missing \"amplitudes\"");
    }
    std::vector<cplx> amps = amplitudes_from_json(doc["amplitudes"]);
    try {
        return StateVector(n, std::move(amps));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
}

PureEnsemble ensemble_from_document(const json& doc) {
    const int n = qubit_count_from_json(doc);
    if (!doc.contains("components") || !doc["components"].is_array() ||
        doc["components"].empty()) {
        throw parse_error("missing non-empty \"components\" array");
    }
    std::vector<EnsembleComponent> comps;
    for (const auto& entry : doc["components"]) {
        if (!entry.contains("weight") || !entry["weight"].is_number()) {
            throw parse_error("component missing numeric \"weight\"");
        }
        if (!entry.contains("amplitudes")) {
            throw parse_error("component missing \"amplitudes\"");
        }
        const double w = entry["weight"].get<double>();
        std::vector<cplx> amps = amplitudes_from_json(entry["amplitudes"]);
        try {
            comps.push_back({w, StateVector(n, std::move(amps))});
        } catch (const std::invalid_argument& ex) {
            throw parse_error(ex.what());
        }
    }
    try {
        return PureEnsemble(n, std::move(comps));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
}

// 12 significant digits, re-parsed as a double.
double round_sig12(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", value);
    return std::strtod(buf, nullptr);
}

} // namespace

std::string state_to_json(const StateVector& s) {
    json doc;
    doc["n_qubits"] = s.n_qubits();
    doc["amplitudes"] = amplitudes_to_json(s.amplitudes());
    return doc.dump(2) + "\n";
}

StateVector state_from_json(const std::string& text) {
    return state_from_document(parse_document(text));
}

std::string ensemble_to_json(const PureEnsemble& e) {
    json doc;
    doc["n_qubits"] = e.n_qubits();
    json comps = json::array();
    for (const auto& comp : e.components()) {
        json c;
        c["weight"] = comp.weight;
        c["amplitudes"] = amplitudes_to_json(comp.state.amplitudes());
        comps.push_back(std::move(c));
    }
    doc["components"] = std::move(comps);
    return doc.dump(2) + "\n";
}

PureEnsemble ensemble_from_json(const std::string& text) {
    return ensemble_from_document(parse_document(text));
}

std::variant<StateVector, PureEnsemble> state_or_ensemble_from_json(const std::string& text) {
    json doc = parse_document(text);
    if (doc.contains("components")) {
        return ensemble_from_document(doc);
    }
    if (doc.contains("amplitudes")) {
        return state_from_document(doc);
    }
    throw parse_error("document has neither \"amplitudes\" nor \"components\"");
}

std::string report_to_json(const AnalysisReport& r) {
    json doc;
    doc["n_qubits"] = r.n_qubits;
    json pairs = json::array();
    for (const auto& pr : r.pairs) {
        json p;
        p["i"] = pr.i;
        p["j"] = pr.j;
        p["concurrence"] = round_sig12(pr.concurrence);
        p["pt_min"] = pr.pt_min_eigenvalue;
        p["entangled"] = pr.is_entangled;
        pairs.push_back(std::move(p));
    }
    doc["pairs"] = std::move(pairs);
    json edges = json::array();
    for (const auto& [i, j] : r.realized_graph.edges()) {
        edges.push_back(json::array({i, j}));
    }
    doc["realized_edges"] = std::move(edges);
    if (r.target_graph) {
        json target = json::array();
        for (const auto& [i, j] : r.target_graph->edges()) {
            target.push_back(json::array({i, j}));
        }
        doc["target_edges"] = std::move(target);
    }
    if (r.match) {
        doc["match"] = *r.match;
    }
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw parse_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw parse_error("cannot write file: " + path);
    }
    out << content;
    if (!out) {
        throw parse_error("failed writing file: " + path);
    }
}

} // namespace entgraph
