#include "screenbench/nn/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "screenbench/error.hpp"

namespace screenbench::nn {

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i)
        bytes[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(bytes), 8);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char*>(bytes), 8);
    if (!in)
        throw ParseError("truncated checkpoint", "<checkpoint>", 0);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& out, double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, 8);
    put_u64(out, bits);
}

double get_f64(std::istream& in) {
    std::uint64_t bits = get_u64(in);
    double d;
    std::memcpy(&d, &bits, 8);
    return d;
}

} // namespace

void write_checkpoint(const std::string& path, const Checkpoint& checkpoint) {
    if (checkpoint.header.find('\n') != std::string::npos)
        throw ValidationError("checkpoint header must be a single line");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open checkpoint for writing: " + path);
    out << checkpoint.header << '\n';
    put_u64(out, checkpoint.tensors.size());
    for (const auto& t : checkpoint.tensors) {
        put_u64(out, t.rows());
        put_u64(out, t.cols());
        for (double v : t.data())
            put_f64(out, v);
    }
    if (!out)
        throw Error("checkpoint write failed: " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open checkpoint: " + path);
    Checkpoint checkpoint;
    std::getline(in, checkpoint.header);
    std::uint64_t count = get_u64(in);
    checkpoint.tensors.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t rows = get_u64(in);
        std::uint64_t cols = get_u64(in);
        Tensor2D t(rows, cols);
        for (double& v : t.data())
            v = get_f64(in);
        checkpoint.tensors.push_back(std::move(t));
    }
    return checkpoint;
}

} // namespace screenbench::nn
