// Command-line front end.  Every subcommand prints exactly one JSON envelope
// {command, parameters, result, format_version} on stdout; --format csv
// renders the same result as a flat table with the envelope metadata in
// leading comment lines.  Domain errors exit 1 with an error envelope on
// stderr; usage errors exit 2.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "primephase/audit.hpp"
#include "primephase/entanglement.hpp"
#include "primephase/finite_field.hpp"
#include "primephase/hilbert.hpp"
#include "primephase/lattice.hpp"
#include "primephase/phase_space.hpp"
#include "primephase/weyl.hpp"

namespace pp = primephase;
using ojson = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kMaxPrintableDim = 1009;
constexpr std::int64_t kMaxWignerDim = 97;
constexpr std::int64_t kMaxInverseTable = 997;

struct OutputOptions {
    std::string format = "json";
    int precision = 12;
};

std::string format_double(double v, int precision) {
    if (v == 0.0) v = 0.0;  // fold -0 into 0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void write_json(std::ostream& os, const ojson& j, int precision) {
    if (j.is_object()) {
        os << '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) os << ',';
            first = false;
            os << ojson(it.key()).dump() << ':';
            write_json(os, it.value(), precision);
        }
        os << '}';
    } else if (j.is_array()) {
        os << '[';
        bool first = true;
        for (const auto& item : j) {
            if (!first) os << ',';
            first = false;
            write_json(os, item, precision);
        }
        os << ']';
    } else if (j.is_number_float()) {
        os << format_double(j.get<double>(), precision);
    } else {
        os << j.dump();
    }
}

ojson complex_to_json(pp::cplx z) { return ojson::array({z.real(), z.imag()}); }

ojson matrix_to_json(const pp::CMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson vec_to_json(const std::vector<double>& v) {
    ojson arr = ojson::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

std::string scalar_to_csv(const ojson& j, int precision) {
    if (j.is_number_float()) return format_double(j.get<double>(), precision);
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

// Flat table renderings of the result payloads.
void write_csv(std::ostream& os, const std::string& command, const ojson& params,
               const ojson& result, int precision) {
    os << "# format_version=1\n# command=" << command << '\n';
    for (auto it = params.begin(); it != params.end(); ++it) {
        os << "# " << it.key() << '=' << scalar_to_csv(it.value(), precision) << '\n';
    }
    for (auto it = result.begin(); it != result.end(); ++it) {
        const ojson& value = it.value();
        if (it.key() == "matrix") {
            os << "row,col,re,im\n";
            for (std::size_t r = 0; r < value.size(); ++r) {
                for (std::size_t c = 0; c < value[r].size(); ++c) {
                    os << r << ',' << c << ',' << format_double(value[r][c][0].get<double>(), precision)
                       << ',' << format_double(value[r][c][1].get<double>(), precision) << '\n';
                }
            }
        } else if (it.key() == "wigner") {
            os << "q,p,w\n";
            for (std::size_t q = 0; q < value.size(); ++q) {
                for (std::size_t p = 0; p < value[q].size(); ++p) {
                    os << q << ',' << p << ',' << format_double(value[q][p].get<double>(), precision)
                       << '\n';
                }
            }
        } else if (it.key() == "states") {
            os << "state,component,re,im\n";
            for (std::size_t s = 0; s < value.size(); ++s) {
                for (std::size_t c = 0; c < value[s].size(); ++c) {
                    os << s << ',' << c << ',' << format_double(value[s][c][0].get<double>(), precision)
                       << ',' << format_double(value[s][c][1].get<double>(), precision) << '\n';
                }
            }
        } else if (it.key() == "inverses") {
            os << "element,inverse\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                os << (i + 1) << ',' << value[i].dump() << '\n';
            }
        } else if (value.is_array()) {
            os << it.key();
            for (const auto& x : value) os << ',' << scalar_to_csv(x, precision);
            os << '\n';
        } else {
            os << it.key() << ',' << scalar_to_csv(value, precision) << '\n';
        }
    }
}

void emit(const std::string& command, const ojson& params, const ojson& result,
          const OutputOptions& out) {
    if (out.format == "csv") {
        write_csv(std::cout, command, params, result, out.precision);
        return;
    }
    ojson envelope;
    envelope["command"] = command;
    envelope["parameters"] = params;
    envelope["result"] = result;
    envelope["format_version"] = "1";
    write_json(std::cout, envelope, out.precision);
    std::cout << '\n';
}

int emit_error(const std::string& command, const ojson& params, const std::string& name,
               const std::string& message, const OutputOptions& out) {
    ojson envelope;
    envelope["command"] = command;
    envelope["parameters"] = params;
    envelope["error"] = name;
    envelope["message"] = message;
    envelope["format_version"] = "1";
    write_json(std::cerr, envelope, out.precision);
    std::cerr << '\n';
    return 1;
}

void require_printable_dim(std::int64_t dim, std::int64_t cap) {
    if (dim < 2 || dim > cap) {
        throw CLI::ValidationError("--dim", "dimension must lie in [2, " + std::to_string(cap) + "]");
    }
}

std::vector<double> parse_components(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "component '" + part + "' is not a number");
        }
    }
    if (out.size() != 2 && out.size() != 3) {
        throw CLI::ValidationError(flag, "expected 2 or 3 comma-separated components");
    }
    return out;
}

// --- subcommand handlers ---------------------------------------------------

ojson run_field(std::int64_t p) {
    const pp::PrimeModulus mod(p);
    ojson result;
    result["p"] = p;
    if (p == 2) {
        result["half"] = nullptr;
    } else {
        result["half"] = pp::half(mod).value();
    }
    if (p <= kMaxInverseTable) {
        ojson inverses = ojson::array();
        for (std::int64_t v = 1; v < p; ++v) {
            inverses.push_back(pp::inv(pp::FieldElement(v, mod)).value());
        }
        result["inverses"] = std::move(inverses);
    }
    return result;
}

ojson run_lattice(const std::vector<double>& a1, const std::vector<double>& a2,
                  const std::optional<std::vector<double>>& a3, bool two_pi) {
    const double tau = two_pi ? 2.0 * std::numbers::pi : 1.0;
    ojson result;
    if (a1.size() == 2 && a2.size() == 2) {
        if (a3.has_value()) {
            throw pp::DimensionMismatchError("--a3 given with 2-component a1/a2");
        }
        const pp::LatticeBasis2D basis({a1[0], a1[1]}, {a2[0], a2[1]});
        pp::ReciprocalBasis2D recip = pp::reciprocal(basis);
        const double residual = pp::biorthogonality_residual(basis, recip);
        result["dimension"] = 2;
        result["b1"] = vec_to_json({tau * recip.b1.x, tau * recip.b1.y});
        result["b2"] = vec_to_json({tau * recip.b2.x, tau * recip.b2.y});
        // under --two-pi the residual is measured against 2*pi*delta
        result["residual"] = two_pi ? tau * residual : residual;
        result["convention"] = two_pi ? "two_pi_delta" : "delta";
        return result;
    }
    if (a1.size() == 3 && a2.size() == 3) {
        if (!a3.has_value() || a3->size() != 3) {
            throw pp::DimensionMismatchError("3-component a1/a2 require a 3-component --a3");
        }
        const auto& a3v = *a3;
        const pp::LatticeBasis3D basis({a1[0], a1[1], a1[2]}, {a2[0], a2[1], a2[2]},
                                       {a3v[0], a3v[1], a3v[2]});
        pp::ReciprocalBasis3D recip = pp::reciprocal(basis);
        const double residual = pp::biorthogonality_residual(basis, recip);
        result["dimension"] = 3;
        result["b1"] = vec_to_json({tau * recip.b1.x, tau * recip.b1.y, tau * recip.b1.z});
        result["b2"] = vec_to_json({tau * recip.b2.x, tau * recip.b2.y, tau * recip.b2.z});
        result["b3"] = vec_to_json({tau * recip.b3.x, tau * recip.b3.y, tau * recip.b3.z});
        result["residual"] = two_pi ? tau * residual : residual;
        result["convention"] = two_pi ? "two_pi_delta" : "delta";
        return result;
    }
    throw pp::DimensionMismatchError("a1 and a2 must both have 2 or both have 3 components");
}

ojson run_dft(std::int64_t dim, bool check_unitary) {
    const pp::CMatrix f = pp::dft_matrix(dim);
    ojson result;
    result["dim"] = dim;
    result["matrix"] = matrix_to_json(f);
    if (check_unitary) result["unitarity_residual"] = pp::unitarity_residual(f);
    return result;
}

ojson run_weyl(std::int64_t dim, std::int64_t a, std::int64_t b) {
    const pp::PrimeModulus mod(dim);
    const pp::DisplacementLabel label(pp::FieldElement(a, mod), pp::FieldElement(b, mod));
    ojson result;
    result["dim"] = dim;
    result["a"] = label.a.value();
    result["b"] = label.b.value();
    result["matrix"] = matrix_to_json(pp::displacement(label));
    return result;
}

pp::CVector read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw CLI::ValidationError("--state", "cannot open '" + path + "'");
    }
    ojson parsed;
    try {
        in >> parsed;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--state", "invalid JSON: " + std::string(e.what()));
    }
    if (!parsed.is_array() || parsed.empty()) {
        throw CLI::ValidationError("--state", "expected a nonempty JSON array of [re, im] pairs");
    }
    pp::CVector amps;
    amps.reserve(parsed.size());
    for (const auto& entry : parsed) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            throw CLI::ValidationError("--state", "each amplitude must be a [re, im] pair");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return amps;
}

ojson run_wigner(std::optional<std::int64_t> dim, const std::string& state_path) {
    const pp::CVector psi = read_state_file(state_path);
    const auto n = static_cast<std::int64_t>(psi.size());
    if (!pp::PrimeModulus::is_prime(n)) {
        throw pp::NotPrimeError("state length " + std::to_string(n) + " is not prime");
    }
    if (dim.has_value() && *dim != n) {
        throw pp::DimensionMismatchError("--dim " + std::to_string(*dim) + " does not match state length " +
                                         std::to_string(n));
    }
    if (n > kMaxWignerDim) {
        throw CLI::ValidationError("--state", "state length must not exceed " +
                                                  std::to_string(kMaxWignerDim));
    }
    pp::CMatrix rho(psi.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
    }
    const pp::WignerFunction w = pp::wigner_transform(rho);
    ojson table = ojson::array();
    for (std::int64_t q = 0; q < n; ++q) {
        ojson row = ojson::array();
        for (std::int64_t p = 0; p < n; ++p) row.push_back(w(q, p));
        table.push_back(std::move(row));
    }
    ojson result;
    result["dim"] = n;
    result["wigner"] = std::move(table);
    result["sum"] = w.sum();
    return result;
}

ojson states_to_json(const pp::CVector& amps) {
    ojson arr = ojson::array();
    for (pp::cplx a : amps) arr.push_back(complex_to_json(a));
    return arr;
}

ojson run_bell() {
    ojson states = ojson::array();
    for (const auto& s : pp::bell_basis()) states.push_back(states_to_json(s.amplitudes));
    ojson result;
    result["n_qubits"] = 2;
    result["states"] = std::move(states);
    return result;
}

ojson run_ghz() {
    ojson states = ojson::array();
    for (const auto& s : pp::ghz_basis()) states.push_back(states_to_json(s.amplitudes));
    ojson result;
    result["n_qubits"] = 3;
    result["states"] = std::move(states);
    return result;
}

ojson run_audit(std::int64_t dim, std::optional<std::int64_t> mode, std::int64_t quad_points) {
    ojson result;
    if (mode.has_value()) {
        const pp::AuditReport r = pp::aliasing_witness(dim, *mode, quad_points);
        result["dim"] = r.dim;
        result["mode"] = r.mode;
        result["quad_points"] = r.quad_points;
        result["g1"] = r.g1;
        result["g2"] = r.g2;
        result["lattice_distance"] = r.lattice_distance;
        result["function_distance"] = r.function_distance;
        result["verdict"] = r.verdict;
        return result;
    }
    const pp::BijectivityReport r = pp::discrete_bijectivity_report(dim);
    result["dim"] = r.dim;
    result["condition_number"] = r.condition_number;
    result["inverse_residual"] = r.inverse_residual;
    result["unitarity_residual"] = r.unitarity_residual;
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete phase-space quantum mechanics on prime lattices"};
    app.require_subcommand(1);

    OutputOptions out;
    app.add_option("--format", out.format, "output serialization")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--precision", out.precision, "printed significant digits")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    std::int64_t field_p = 0;
    CLI::App* field = app.add_subcommand("field", "validate GF(p) and print inverse tables");
    field->fallthrough();
    field->add_option("--p", field_p, "prime modulus")->required();

    std::string lat_a1, lat_a2, lat_a3;
    bool two_pi = false;
    CLI::App* lattice = app.add_subcommand("lattice", "reciprocal lattice vectors");
    lattice->fallthrough();
    lattice->add_option("--a1", lat_a1, "first primitive vector, e.g. 1,0,0")->required();
    lattice->add_option("--a2", lat_a2, "second primitive vector")->required();
    lattice->add_option("--a3", lat_a3, "third primitive vector (3-D only)");
    lattice->add_flag("--two-pi", two_pi, "scale output by 2*pi (crystallographic convention)");

    std::int64_t dft_dim = 0;
    bool check_unitary = false;
    CLI::App* dft = app.add_subcommand("dft", "N-point transform matrix");
    dft->fallthrough();
    dft->add_option("--dim", dft_dim, "prime dimension")->required();
    dft->add_flag("--check-unitary", check_unitary, "also print ||F F^dag - I||_max");

    std::int64_t weyl_dim = 0, weyl_a = 0, weyl_b = 0;
    CLI::App* weyl = app.add_subcommand("weyl", "displacement operator D(a,b)");
    weyl->fallthrough();
    weyl->add_option("--dim", weyl_dim, "prime dimension")->required();
    weyl->add_option("--a", weyl_a, "position shift (reduced mod N)");
    weyl->add_option("--b", weyl_b, "momentum shift (reduced mod N)");

    std::int64_t wigner_dim = -1;
    std::string state_path;
    CLI::App* wigner = app.add_subcommand("wigner", "Wigner function of a pure state");
    wigner->fallthrough();
    wigner->add_option("--dim", wigner_dim, "prime dimension (optional, checked against the file)");
    wigner->add_option("--state", state_path, "JSON file: array of [re, im] pairs")->required();

    CLI::App* bell = app.add_subcommand("bell", "two-qubit entangled basis");
    bell->fallthrough();
    CLI::App* ghz = app.add_subcommand("ghz", "three-qubit entangled basis");
    ghz->fallthrough();

    std::int64_t audit_dim = 0, audit_mode = -1, audit_quad = 0;
    CLI::App* audit = app.add_subcommand("audit", "bijectivity certificates and aliasing probes");
    audit->fallthrough();
    audit->add_option("--dim", audit_dim, "prime dimension")->required();
    audit->add_option("--mode", audit_mode, "continuum mode index m >= N for the aliasing probe");
    audit->add_option("--quad-points", audit_quad, "quadrature nodes (0 = automatic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    std::string command;
    ojson params;
    try {
        if (app.got_subcommand(field)) {
            command = "field";
            params["p"] = field_p;
            params["format"] = out.format;
            params["precision"] = out.precision;
            emit(command, params, run_field(field_p), out);
        } else if (app.got_subcommand(lattice)) {
            command = "lattice";
            params["a1"] = lat_a1;
            params["a2"] = lat_a2;
            if (!lat_a3.empty()) params["a3"] = lat_a3;
            params["two_pi"] = two_pi;
            params["format"] = out.format;
            params["precision"] = out.precision;
            const auto v1 = parse_components(lat_a1, "--a1");
            const auto v2 = parse_components(lat_a2, "--a2");
            std::optional<std::vector<double>> v3;
            if (!lat_a3.empty()) v3 = parse_components(lat_a3, "--a3");
            emit(command, params, run_lattice(v1, v2, v3, two_pi), out);
        } else if (app.got_subcommand(dft)) {
            command = "dft";
            params["dim"] = dft_dim;
            params["check_unitary"] = check_unitary;
            params["format"] = out.format;
            params["precision"] = out.precision;
            require_printable_dim(dft_dim, kMaxPrintableDim);
            emit(command, params, run_dft(dft_dim, check_unitary), out);
        } else if (app.got_subcommand(weyl)) {
            command = "weyl";
            params["dim"] = weyl_dim;
            params["a"] = weyl_a;
            params["b"] = weyl_b;
            params["format"] = out.format;
            params["precision"] = out.precision;
            require_printable_dim(weyl_dim, kMaxPrintableDim);
            emit(command, params, run_weyl(weyl_dim, weyl_a, weyl_b), out);
        } else if (app.got_subcommand(wigner)) {
            command = "wigner";
            if (wigner_dim >= 0) params["dim"] = wigner_dim;
            params["state"] = state_path;
            params["format"] = out.format;
            params["precision"] = out.precision;
            std::optional<std::int64_t> dim;
            if (wigner_dim >= 0) dim = wigner_dim;
            emit(command, params, run_wigner(dim, state_path), out);
        } else if (app.got_subcommand(bell)) {
            command = "bell";
            params["format"] = out.format;
            params["precision"] = out.precision;
            emit(command, params, run_bell(), out);
        } else if (app.got_subcommand(ghz)) {
            command = "ghz";
            params["format"] = out.format;
            params["precision"] = out.precision;
            emit(command, params, run_ghz(), out);
        } else if (app.got_subcommand(audit)) {
            command = "audit";
            params["dim"] = audit_dim;
            if (audit_mode >= 0) params["mode"] = audit_mode;
            if (audit_quad != 0) params["quad_points"] = audit_quad;
            params["format"] = out.format;
            params["precision"] = out.precision;
            require_printable_dim(audit_dim, kMaxPrintableDim);
            std::optional<std::int64_t> mode;
            if (audit_mode >= 0) mode = audit_mode;
            emit(command, params, run_audit(audit_dim, mode, audit_quad), out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const pp::Error& e) {
        return emit_error(command, params, e.name(), e.what(), out);
    } catch (const std::exception& e) {
        return emit_error(command, params, "Internal", e.what(), out);
    }
    return 0;
}
