// Generated by tools/gen_igusa_tables.py; do not edit.

#include "g2/igusa_tables.hpp"

namespace g2::igusa {

const Term kJ2[] = {
    {{1, 0, 0, 0, 0, 0, 1}, -120},
    {{0, 1, 0, 0, 0, 1, 0}, 20},
    {{0, 0, 1, 0, 1, 0, 0}, -8},
    {{0, 0, 0, 2, 0, 0, 0}, 3},
};

const Term kJ4[] = {
    {{2, 0, 0, 0, 0, 0, 2}, 2640},
    {{1, 1, 0, 0, 0, 1, 1}, -880},
    {{1, 0, 1, 0, 1, 0, 1}, 1312},
    {{1, 0, 1, 0, 0, 2, 0}, -400},
    {{1, 0, 0, 2, 0, 0, 1}, -672},
    {{1, 0, 0, 1, 1, 1, 0}, 240},
    {{1, 0, 0, 0, 3, 0, 0}, -64},
    {{0, 2, 0, 0, 1, 0, 1}, -400},
    {{0, 2, 0, 0, 0, 2, 0}, 240},
    {{0, 1, 1, 1, 0, 0, 1}, 240},
    {{0, 1, 1, 0, 1, 1, 0}, -112},
    {{0, 1, 0, 2, 0, 1, 0}, -8},
    {{0, 1, 0, 1, 2, 0, 0}, 16},
    {{0, 0, 3, 0, 0, 0, 1}, -64},
    {{0, 0, 2, 1, 0, 1, 0}, 16},
    {{0, 0, 2, 0, 2, 0, 0}, 16},
    {{0, 0, 1, 2, 1, 0, 0}, -16},
    {{0, 0, 0, 4, 0, 0, 0}, 3},
};

const Term kJ6[] = {
    {{3, 0, 0, 0, 0, 0, 3}, 5120},
    {{2, 1, 0, 0, 0, 1, 2}, -2560},
    {{2, 0, 1, 0, 1, 0, 2}, -14336},
    {{2, 0, 1, 0, 0, 2, 1}, 6400},
    {{2, 0, 0, 2, 0, 0, 2}, -2544},
    {{2, 0, 0, 1, 1, 1, 1}, 10560},
    {{2, 0, 0, 1, 0, 3, 0}, -4000},
    {{2, 0, 0, 0, 3, 0, 1}, -4096},
    {{2, 0, 0, 0, 2, 2, 0}, 1600},
    {{1, 2, 0, 0, 1, 0, 2}, 6400},
    {{1, 2, 0, 0, 0, 2, 1}, -2240},
    {{1, 1, 1, 1, 0, 0, 2}, 10560},
    {{1, 1, 1, 0, 1, 1, 1}, -6528},
    {{1, 1, 1, 0, 0, 3, 0}, 1600},
    {{1, 1, 0, 2, 0, 1, 1}, -4432},
    {{1, 1, 0, 1, 2, 0, 1}, 2624},
    {{1, 1, 0, 1, 1, 2, 0}, 640},
    {{1, 1, 0, 0, 3, 1, 0}, -384},
    {{1, 0, 3, 0, 0, 0, 2}, -4096},
    {{1, 0, 2, 1, 0, 1, 1}, 2624},
    {{1, 0, 2, 0, 2, 0, 1}, 1024},
    {{1, 0, 2, 0, 1, 2, 0}, -640},
    {{1, 0, 1, 2, 1, 0, 1}, -1568},
    {{1, 0, 1, 2, 0, 2, 0}, 80},
    {{1, 0, 1, 1, 2, 1, 0}, 192},
    {{1, 0, 0, 4, 0, 0, 1}, 312},
    {{1, 0, 0, 3, 1, 1, 0}, -48},
    {{0, 3, 0, 1, 0, 0, 2}, -4000},
    {{0, 3, 0, 0, 1, 1, 1}, 1600},
    {{0, 3, 0, 0, 0, 3, 0}, -320},
    {{0, 2, 2, 0, 0, 0, 2}, 1600},
    {{0, 2, 1, 1, 0, 1, 1}, 640},
    {{0, 2, 1, 0, 2, 0, 1}, -640},
    {{0, 2, 1, 0, 1, 2, 0}, 64},
    {{0, 2, 0, 2, 1, 0, 1}, 80},
    {{0, 2, 0, 2, 0, 2, 0}, 176},
    {{0, 2, 0, 1, 2, 1, 0}, -224},
    {{0, 2, 0, 0, 4, 0, 0}, 64},
    {{0, 1, 3, 0, 0, 1, 1}, -384},
    {{0, 1, 2, 1, 1, 0, 1}, 192},
    {{0, 1, 2, 1, 0, 2, 0}, -224},
    {{0, 1, 2, 0, 2, 1, 0}, 128},
    {{0, 1, 1, 3, 0, 0, 1}, -48},
    {{0, 1, 1, 2, 1, 1, 0}, 112},
    {{0, 1, 1, 1, 3, 0, 0}, -64},
    {{0, 1, 0, 4, 0, 1, 0}, -28},
    {{0, 1, 0, 3, 2, 0, 0}, 16},
    {{0, 0, 4, 0, 0, 2, 0}, 64},
    {{0, 0, 3, 1, 1, 1, 0}, -64},
    {{0, 0, 2, 3, 0, 1, 0}, 16},
    {{0, 0, 2, 2, 2, 0, 0}, 16},
    {{0, 0, 1, 4, 1, 0, 0}, -8},
    {{0, 0, 0, 6, 0, 0, 0}, 1},
};

const Term kJ10[] = {
    {{5, 0, 0, 0, 0, 0, 5}, -46656},
    {{4, 1, 0, 0, 0, 1, 4}, 38880},
    {{4, 0, 1, 0, 1, 0, 4}, 62208},
    {{4, 0, 1, 0, 0, 2, 3}, -32400},
    {{4, 0, 0, 2, 0, 0, 4}, 34992},
    {{4, 0, 0, 1, 1, 1, 3}, -77760},
    {{4, 0, 0, 1, 0, 3, 2}, 27000},
    {{4, 0, 0, 0, 3, 0, 3}, -13824},
    {{4, 0, 0, 0, 2, 2, 2}, 43200},
    {{4, 0, 0, 0, 1, 4, 1}, -22500},
    {{4, 0, 0, 0, 0, 6, 0}, 3125},
    {{3, 2, 0, 0, 1, 0, 4}, -32400},
    {{3, 2, 0, 0, 0, 2, 3}, 540},
    {{3, 1, 1, 1, 0, 0, 4}, -77760},
    {{3, 1, 1, 0, 1, 1, 3}, 31968},
    {{3, 1, 1, 0, 0, 3, 2}, -1800},
    {{3, 1, 0, 2, 0, 1, 3}, 15552},
    {{3, 1, 0, 1, 2, 0, 3}, 46656},
    {{3, 1, 0, 1, 1, 2, 2}, -31320},
    {{3, 1, 0, 1, 0, 4, 1}, 2250},
    {{3, 1, 0, 0, 3, 1, 2}, -21888},
    {{3, 1, 0, 0, 2, 3, 1}, 15600},
    {{3, 1, 0, 0, 1, 5, 0}, -2500},
    {{3, 0, 3, 0, 0, 0, 4}, -13824},
    {{3, 0, 2, 1, 0, 1, 3}, 46656},
    {{3, 0, 2, 0, 2, 0, 3}, -17280},
    {{3, 0, 2, 0, 1, 2, 2}, -6480},
    {{3, 0, 2, 0, 0, 4, 1}, 1500},
    {{3, 0, 1, 2, 1, 0, 3}, 3888},
    {{3, 0, 1, 2, 0, 2, 2}, -27540},
    {{3, 0, 1, 1, 2, 1, 2}, -3456},
    {{3, 0, 1, 1, 1, 3, 1}, 19800},
    {{3, 0, 1, 1, 0, 5, 0}, -3750},
    {{3, 0, 1, 0, 4, 0, 2}, 9216},
    {{3, 0, 1, 0, 3, 2, 1}, -10560},
    {{3, 0, 1, 0, 2, 4, 0}, 2000},
    {{3, 0, 0, 4, 0, 0, 3}, -8748},
    {{3, 0, 0, 3, 1, 1, 2}, 21384},
    {{3, 0, 0, 3, 0, 3, 1}, -1350},
    {{3, 0, 0, 2, 3, 0, 2}, -8640},
    {{3, 0, 0, 2, 2, 2, 1}, -9720},
    {{3, 0, 0, 2, 1, 4, 0}, 2250},
    {{3, 0, 0, 1, 4, 1, 1}, 6912},
    {{3, 0, 0, 1, 3, 3, 0}, -1600},
    {{3, 0, 0, 0, 6, 0, 1}, -1024},
    {{3, 0, 0, 0, 5, 2, 0}, 256},
    {{2, 3, 0, 1, 0, 0, 4}, 27000},
    {{2, 3, 0, 0, 1, 1, 3}, -1800},
    {{2, 3, 0, 0, 0, 3, 2}, 410},
    {{2, 2, 2, 0, 0, 0, 4}, 43200},
    {{2, 2, 1, 1, 0, 1, 3}, -31320},
    {{2, 2, 1, 0, 2, 0, 3}, -6480},
    {{2, 2, 1, 0, 1, 2, 2}, 8748},
    {{2, 2, 1, 0, 0, 4, 1}, -1700},
    {{2, 2, 0, 2, 1, 0, 3}, -27540},
    {{2, 2, 0, 2, 0, 2, 2}, 15417},
    {{2, 2, 0, 1, 2, 1, 2}, 16632},
    {{2, 2, 0, 1, 1, 3, 1}, -12330},
    {{2, 2, 0, 1, 0, 5, 0}, 2000},
    {{2, 2, 0, 0, 4, 0, 2}, -192},
    {{2, 2, 0, 0, 3, 2, 1}, 248},
    {{2, 2, 0, 0, 2, 4, 0}, -50},
    {{2, 1, 3, 0, 0, 1, 3}, -21888},
    {{2, 1, 2, 1, 1, 0, 3}, -3456},
    {{2, 1, 2, 1, 0, 2, 2}, 16632},
    {{2, 1, 2, 0, 2, 1, 2}, 15264},
    {{2, 1, 2, 0, 1, 3, 1}, -13040},
    {{2, 1, 2, 0, 0, 5, 0}, 2250},
    {{2, 1, 1, 3, 0, 0, 3}, 21384},
    {{2, 1, 1, 2, 1, 1, 2}, -22896},
    {{2, 1, 1, 2, 0, 3, 1}, 1980},
    {{2, 1, 1, 1, 3, 0, 2}, -5760},
    {{2, 1, 1, 1, 2, 2, 1}, 10152},
    {{2, 1, 1, 1, 1, 4, 0}, -2050},
    {{2, 1, 1, 0, 4, 1, 1}, -640},
    {{2, 1, 1, 0, 3, 3, 0}, 160},
    {{2, 1, 0, 4, 0, 1, 2}, -6318},
    {{2, 1, 0, 3, 2, 0, 2}, 5832},
    {{2, 1, 0, 3, 1, 2, 1}, 3942},
    {{2, 1, 0, 3, 0, 4, 0}, -900},
    {{2, 1, 0, 2, 3, 1, 1}, -4464},
    {{2, 1, 0, 2, 2, 3, 0}, 1020},
    {{2, 1, 0, 1, 5, 0, 1}, 768},
    {{2, 1, 0, 1, 4, 2, 0}, -192},
    {{2, 0, 4, 0, 1, 0, 3}, 9216},
    {{2, 0, 4, 0, 0, 2, 2}, -192},
    {{2, 0, 3, 2, 0, 0, 3}, -8640},
    {{2, 0, 3, 1, 1, 1, 2}, -5760},
    {{2, 0, 3, 1, 0, 3, 1}, -120},
    {{2, 0, 3, 0, 3, 0, 2}, -4352},
    {{2, 0, 3, 0, 2, 2, 1}, 4816},
    {{2, 0, 3, 0, 1, 4, 0}, -900},
    {{2, 0, 2, 3, 0, 1, 2}, 5832},
    {{2, 0, 2, 2, 2, 0, 2}, 8208},
    {{2, 0, 2, 2, 1, 2, 1}, -4536},
    {{2, 0, 2, 2, 0, 4, 0}, 825},
    {{2, 0, 2, 1, 3, 1, 1}, -2496},
    {{2, 0, 2, 1, 2, 3, 0}, 560},
    {{2, 0, 2, 0, 5, 0, 1}, 512},
    {{2, 0, 2, 0, 4, 2, 0}, -128},
    {{2, 0, 1, 4, 1, 0, 2}, -4860},
    {{2, 0, 1, 4, 0, 2, 1}, 162},
    {{2, 0, 1, 3, 2, 1, 1}, 2808},
    {{2, 0, 1, 3, 1, 3, 0}, -630},
    {{2, 0, 1, 2, 4, 0, 1}, -576},
    {{2, 0, 1, 2, 3, 2, 0}, 144},
    {{2, 0, 0, 6, 0, 0, 2}, 729},
    {{2, 0, 0, 5, 1, 1, 1}, -486},
    {{2, 0, 0, 5, 0, 3, 0}, 108},
    {{2, 0, 0, 4, 3, 0, 1}, 108},
    {{2, 0, 0, 4, 2, 2, 0}, -27},
    {{1, 4, 1, 0, 0, 0, 4}, -22500},
    {{1, 4, 0, 1, 0, 1, 3}, 2250},
    {{1, 4, 0, 0, 2, 0, 3}, 1500},
    {{1, 4, 0, 0, 1, 2, 2}, -1700},
    {{1, 4, 0, 0, 0, 4, 1}, 320},
    {{1, 3, 2, 0, 0, 1, 3}, 15600},
    {{1, 3, 1, 1, 1, 0, 3}, 19800},
    {{1, 3, 1, 1, 0, 2, 2}, -12330},
    {{1, 3, 1, 0, 2, 1, 2}, -13040},
    {{1, 3, 1, 0, 1, 3, 1}, 9768},
    {{1, 3, 1, 0, 0, 5, 0}, -1600},
    {{1, 3, 0, 3, 0, 0, 3}, -1350},
    {{1, 3, 0, 2, 1, 1, 2}, 1980},
    {{1, 3, 0, 2, 0, 3, 1}, -208},
    {{1, 3, 0, 1, 3, 0, 2}, -120},
    {{1, 3, 0, 1, 2, 2, 1}, -682},
    {{1, 3, 0, 1, 1, 4, 0}, 160},
    {{1, 3, 0, 0, 4, 1, 1}, 144},
    {{1, 3, 0, 0, 3, 3, 0}, -36},
    {{1, 2, 3, 0, 1, 0, 3}, -10560},
    {{1, 2, 3, 0, 0, 2, 2}, 248},
    {{1, 2, 2, 2, 0, 0, 3}, -9720},
    {{1, 2, 2, 1, 1, 1, 2}, 10152},
    {{1, 2, 2, 1, 0, 3, 1}, -682},
    {{1, 2, 2, 0, 3, 0, 2}, 4816},
    {{1, 2, 2, 0, 2, 2, 1}, -5428},
    {{1, 2, 2, 0, 1, 4, 0}, 1020},
    {{1, 2, 1, 3, 0, 1, 2}, 3942},
    {{1, 2, 1, 2, 2, 0, 2}, -4536},
    {{1, 2, 1, 2, 1, 2, 1}, -2412},
    {{1, 2, 1, 2, 0, 4, 0}, 560},
    {{1, 2, 1, 1, 3, 1, 1}, 3272},
    {{1, 2, 1, 1, 2, 3, 0}, -746},
    {{1, 2, 1, 0, 5, 0, 1}, -576},
    {{1, 2, 1, 0, 4, 2, 0}, 144},
    {{1, 2, 0, 4, 1, 0, 2}, 162},
    {{1, 2, 0, 3, 2, 1, 1}, -108},
    {{1, 2, 0, 3, 1, 3, 0}, 24},
    {{1, 2, 0, 2, 4, 0, 1}, 24},
    {{1, 2, 0, 2, 3, 2, 0}, -6},
    {{1, 1, 4, 1, 0, 0, 3}, 6912},
    {{1, 1, 4, 0, 1, 1, 2}, -640},
    {{1, 1, 4, 0, 0, 3, 1}, 144},
    {{1, 1, 3, 2, 0, 1, 2}, -4464},
    {{1, 1, 3, 1, 2, 0, 2}, -2496},
    {{1, 1, 3, 1, 1, 2, 1}, 3272},
    {{1, 1, 3, 1, 0, 4, 0}, -630},
    {{1, 1, 3, 0, 3, 1, 1}, -96},
    {{1, 1, 3, 0, 2, 3, 0}, 24},
    {{1, 1, 2, 3, 1, 0, 2}, 2808},
    {{1, 1, 2, 3, 0, 2, 1}, -108},
    {{1, 1, 2, 2, 2, 1, 1}, -1584},
    {{1, 1, 2, 2, 1, 3, 0}, 356},
    {{1, 1, 2, 1, 4, 0, 1}, 320},
    {{1, 1, 2, 1, 3, 2, 0}, -80},
    {{1, 1, 1, 5, 0, 0, 2}, -486},
    {{1, 1, 1, 4, 1, 1, 1}, 324},
    {{1, 1, 1, 4, 0, 3, 0}, -72},
    {{1, 1, 1, 3, 3, 0, 1}, -72},
    {{1, 1, 1, 3, 2, 2, 0}, 18},
    {{1, 0, 6, 0, 0, 0, 3}, -1024},
    {{1, 0, 5, 1, 0, 1, 2}, 768},
    {{1, 0, 5, 0, 2, 0, 2}, 512},
    {{1, 0, 5, 0, 1, 2, 1}, -576},
    {{1, 0, 5, 0, 0, 4, 0}, 108},
    {{1, 0, 4, 2, 1, 0, 2}, -576},
    {{1, 0, 4, 2, 0, 2, 1}, 24},
    {{1, 0, 4, 1, 2, 1, 1}, 320},
    {{1, 0, 4, 1, 1, 3, 0}, -72},
    {{1, 0, 4, 0, 4, 0, 1}, -64},
    {{1, 0, 4, 0, 3, 2, 0}, 16},
    {{1, 0, 3, 4, 0, 0, 2}, 108},
    {{1, 0, 3, 3, 1, 1, 1}, -72},
    {{1, 0, 3, 3, 0, 3, 0}, 16},
    {{1, 0, 3, 2, 3, 0, 1}, 16},
    {{1, 0, 3, 2, 2, 2, 0}, -4},
    {{0, 6, 0, 0, 0, 0, 4}, 3125},
    {{0, 5, 1, 0, 0, 1, 3}, -2500},
    {{0, 5, 0, 1, 1, 0, 3}, -3750},
    {{0, 5, 0, 1, 0, 2, 2}, 2000},
    {{0, 5, 0, 0, 2, 1, 2}, 2250},
    {{0, 5, 0, 0, 1, 3, 1}, -1600},
    {{0, 5, 0, 0, 0, 5, 0}, 256},
    {{0, 4, 2, 0, 1, 0, 3}, 2000},
    {{0, 4, 2, 0, 0, 2, 2}, -50},
    {{0, 4, 1, 2, 0, 0, 3}, 2250},
    {{0, 4, 1, 1, 1, 1, 2}, -2050},
    {{0, 4, 1, 1, 0, 3, 1}, 160},
    {{0, 4, 1, 0, 3, 0, 2}, -900},
    {{0, 4, 1, 0, 2, 2, 1}, 1020},
    {{0, 4, 1, 0, 1, 4, 0}, -192},
    {{0, 4, 0, 3, 0, 1, 2}, -900},
    {{0, 4, 0, 2, 2, 0, 2}, 825},
    {{0, 4, 0, 2, 1, 2, 1}, 560},
    {{0, 4, 0, 2, 0, 4, 0}, -128},
    {{0, 4, 0, 1, 3, 1, 1}, -630},
    {{0, 4, 0, 1, 2, 3, 0}, 144},
    {{0, 4, 0, 0, 5, 0, 1}, 108},
    {{0, 4, 0, 0, 4, 2, 0}, -27},
    {{0, 3, 3, 1, 0, 0, 3}, -1600},
    {{0, 3, 3, 0, 1, 1, 2}, 160},
    {{0, 3, 3, 0, 0, 3, 1}, -36},
    {{0, 3, 2, 2, 0, 1, 2}, 1020},
    {{0, 3, 2, 1, 2, 0, 2}, 560},
    {{0, 3, 2, 1, 1, 2, 1}, -746},
    {{0, 3, 2, 1, 0, 4, 0}, 144},
    {{0, 3, 2, 0, 3, 1, 1}, 24},
    {{0, 3, 2, 0, 2, 3, 0}, -6},
    {{0, 3, 1, 3, 1, 0, 2}, -630},
    {{0, 3, 1, 3, 0, 2, 1}, 24},
    {{0, 3, 1, 2, 2, 1, 1}, 356},
    {{0, 3, 1, 2, 1, 3, 0}, -80},
    {{0, 3, 1, 1, 4, 0, 1}, -72},
    {{0, 3, 1, 1, 3, 2, 0}, 18},
    {{0, 3, 0, 5, 0, 0, 2}, 108},
    {{0, 3, 0, 4, 1, 1, 1}, -72},
    {{0, 3, 0, 4, 0, 3, 0}, 16},
    {{0, 3, 0, 3, 3, 0, 1}, 16},
    {{0, 3, 0, 3, 2, 2, 0}, -4},
    {{0, 2, 5, 0, 0, 0, 3}, 256},
    {{0, 2, 4, 1, 0, 1, 2}, -192},
    {{0, 2, 4, 0, 2, 0, 2}, -128},
    {{0, 2, 4, 0, 1, 2, 1}, 144},
    {{0, 2, 4, 0, 0, 4, 0}, -27},
    {{0, 2, 3, 2, 1, 0, 2}, 144},
    {{0, 2, 3, 2, 0, 2, 1}, -6},
    {{0, 2, 3, 1, 2, 1, 1}, -80},
    {{0, 2, 3, 1, 1, 3, 0}, 18},
    {{0, 2, 3, 0, 4, 0, 1}, 16},
    {{0, 2, 3, 0, 3, 2, 0}, -4},
    {{0, 2, 2, 4, 0, 0, 2}, -27},
    {{0, 2, 2, 3, 1, 1, 1}, 18},
    {{0, 2, 2, 3, 0, 3, 0}, -4},
    {{0, 2, 2, 2, 3, 0, 1}, -4},
    {{0, 2, 2, 2, 2, 2, 0}, 1},
};

const Table kTables[4] = {
    {kJ2, sizeof(kJ2) / sizeof(Term), 2},
    {kJ4, sizeof(kJ4) / sizeof(Term), 7},
    {kJ6, sizeof(kJ6) / sizeof(Term), 10},
    {kJ10, sizeof(kJ10) / sizeof(Term), 12},
};

}  // namespace g2::igusa
