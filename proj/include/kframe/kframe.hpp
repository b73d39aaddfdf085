#ifndef KFRAME_KFRAME_HPP
#define KFRAME_KFRAME_HPP

#include <kframe/cocycles.hpp>
#include <kframe/error.hpp>
#include <kframe/expansion.hpp>
#include <kframe/homology.hpp>
#include <kframe/io.hpp>
#include <kframe/linalg.hpp>
#include <kframe/mcg.hpp>
#include <kframe/pairing.hpp>
#include <kframe/qform.hpp>
#include <kframe/random.hpp>
#include <kframe/relf.hpp>
#include <kframe/rng.hpp>
#include <kframe/scalar.hpp>
#include <kframe/suite.hpp>
#include <kframe/surface.hpp>
#include <kframe/tensor.hpp>
#include <kframe/word.hpp>

#endif
