#pragma once

#include <wellcentered/abelian_group.hpp>
#include <wellcentered/hilbert.hpp>
#include <wellcentered/integer.hpp>
#include <wellcentered/io.hpp>
#include <wellcentered/membership.hpp>
#include <wellcentered/multipoly.hpp>
#include <wellcentered/overring.hpp>
#include <wellcentered/sampler.hpp>
#include <wellcentered/smith.hpp>
#include <wellcentered/theorem_suite.hpp>
#include <wellcentered/witness_examples.hpp>
