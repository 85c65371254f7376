// Model file layout, all integers and floats little-endian:
//
//   offset 0   8 bytes   magic "ROSGNN\r\n"
//   offset 8   u32       format version (1)
//   offset 12  u32 x 6   layers, input_dim, hidden_dim, output_dim,
//                        activation (0 = relu), graph_norm (0/1)
//   offset 36  f64 ...   parameter blocks, layer by layer:
//                          self_weight      out x in, row-major
//                          neighbor_weight  out x in, row-major
//                          norm_scale, norm_shift, mean_scale  (normalized layers only)
//
// The file must end exactly after the last block.

#include <array>
#include <bit>
#include <cstring>
#include <sstream>

#include "ros/error.hpp"
#include "ros/graph_io.hpp"
#include "ros/train.hpp"

namespace ros {

namespace {

constexpr std::array<char, 8> kMagic = {'R', 'O', 'S', 'G', 'N', 'N', '\r', '\n'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::uint32_t kMaxDim = 1u << 20;

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double d) {
    const auto v = std::bit_cast<std::uint64_t>(d);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes_[pos_++])) << (8 * i);
        return v;
    }

    double f64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_++])) << (8 * i);
        return std::bit_cast<double>(v);
    }

    std::string_view take(std::size_t n) {
        need(n);
        auto s = bytes_.substr(pos_, n);
        pos_ += n;
        return s;
    }

    bool done() const { return pos_ == bytes_.size(); }

private:
    void need(std::size_t n) const {
        if (bytes_.size() - pos_ < n) throw Error(ErrorKind::format, "model file is truncated");
    }

    std::string_view bytes_;
    std::size_t pos_ = 0;
};

void put_matrix(std::string& out, const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) put_f64(out, m(i, j));
    }
}

void get_matrix(Reader& in, Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = in.f64();
    }
}

void put_vector(std::string& out, const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) put_f64(out, v(i));
}

void get_vector(Reader& in, Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = in.f64();
}

}  // namespace

std::string encode_model(const GnnParameters& params, const GnnArchitecture& arch) {
    arch.validate();
    params.check_shape(arch);
    std::string out(kMagic.begin(), kMagic.end());
    put_u32(out, kFormatVersion);
    put_u32(out, static_cast<std::uint32_t>(arch.layers));
    put_u32(out, static_cast<std::uint32_t>(arch.input_dim));
    put_u32(out, static_cast<std::uint32_t>(arch.hidden_dim));
    put_u32(out, static_cast<std::uint32_t>(arch.output_dim));
    put_u32(out, static_cast<std::uint32_t>(arch.activation));
    put_u32(out, arch.graph_norm ? 1u : 0u);
    for (const auto& layer : params.layers) {
        put_matrix(out, layer.self_weight);
        put_matrix(out, layer.neighbor_weight);
        if (layer.norm_scale.size() > 0) {
            put_vector(out, layer.norm_scale);
            put_vector(out, layer.norm_shift);
            put_vector(out, layer.mean_scale);
        }
    }
    return out;
}

LoadedModel decode_model(std::string_view bytes) {
    Reader in(bytes);
    if (bytes.size() < kMagic.size() || std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
        throw Error(ErrorKind::format, "not a model file (bad magic)");
    }
    in.take(kMagic.size());
    const auto version = in.u32();
    if (version != kFormatVersion) {
        throw Error(ErrorKind::format, "unsupported model format version " + std::to_string(version));
    }
    LoadedModel m;
    m.arch.layers = in.u32();
    m.arch.input_dim = in.u32();
    m.arch.hidden_dim = in.u32();
    m.arch.output_dim = in.u32();
    const auto activation = in.u32();
    if (activation != static_cast<std::uint32_t>(Activation::relu)) {
        throw Error(ErrorKind::format, "unknown activation tag " + std::to_string(activation));
    }
    m.arch.activation = Activation::relu;
    const auto norm = in.u32();
    if (norm > 1) throw Error(ErrorKind::format, "bad graph-norm flag");
    m.arch.graph_norm = norm == 1;
    if (m.arch.layers == 0 || m.arch.layers > 64 || m.arch.input_dim > kMaxDim || m.arch.hidden_dim > kMaxDim ||
        m.arch.output_dim > kMaxDim) {
        throw Error(ErrorKind::format, "implausible architecture descriptor");
    }
    try {
        m.arch.validate();
    } catch (const Error& e) {
        throw Error(ErrorKind::format, std::string("invalid architecture: ") + e.what());
    }
    m.params = GnnParameters::zeros(m.arch);
    for (auto& layer : m.params.layers) {
        get_matrix(in, layer.self_weight);
        get_matrix(in, layer.neighbor_weight);
        if (layer.norm_scale.size() > 0) {
            get_vector(in, layer.norm_scale);
            get_vector(in, layer.norm_shift);
            get_vector(in, layer.mean_scale);
        }
    }
    if (!in.done()) throw Error(ErrorKind::format, "trailing bytes after model parameters");
    return m;
}

void save_model(const GnnParameters& params, const GnnArchitecture& arch, const std::filesystem::path& path) {
    write_text_file(path, encode_model(params, arch));
}

LoadedModel load_model(const std::filesystem::path& path) {
    return decode_model(read_text_file(path));
}

}  // namespace ros
