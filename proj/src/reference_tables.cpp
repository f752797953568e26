#include "spiked/reference_tables.hpp"

namespace spiked::reference_tables {

const std::array<std::array<double, 10>, 5> table1 = {{
    {0.014093664, 0.020199526, 0.026201793, 0.032153953, 0.038047366,
     0.043892069, 0.049552918, 0.055291222, 0.060543550, 0.065805452},
    {0.007895881, 0.010734904, 0.013558855, 0.016363232, 0.019160964,
     0.021940815, 0.024707753, 0.027459101, 0.030197819, 0.032920750},
    {0.005038139, 0.006579901, 0.008118140, 0.009652883, 0.011184153,
     0.012711974, 0.014236371, 0.015757368, 0.017274988, 0.018789252},
    {0.003491750, 0.004420052, 0.005347298, 0.006273491, 0.007198635,
     0.008122733, 0.009045789, 0.009967806, 0.010888788, 0.011808738},
    {0.002561967, 0.003163657, 0.003764967, 0.004365899, 0.004966453,
     0.005566631, 0.006166432, 0.006765857, 0.007364908, 0.007963584},
}};

const std::array<std::vector<double>, 5> table2 = {{
    {0.005042540},
    {0.005038139, 0.006590264},
    {0.005038139, 0.006579901, 0.008136005},
    {0.005038139, 0.006579901, 0.008118140, 0.009652883, 0.011184159,
     0.012761400},
    {0.005038139, 0.006579901, 0.008118140, 0.009652883, 0.011184152,
     0.012711974, 0.014236371, 0.015757367, 0.017274987, 0.018789252},
}};

const std::array<std::array<double, 10>, 5> table3 = {{
    {0.014088829, 0.020168585, 0.026152741, 0.032044738, 0.037847372,
     0.043562902, 0.049193129, 0.054739450, 0.060202910, 0.065584229},
    {0.007895857, 0.010734771, 0.013558349, 0.016366668, 0.019159733,
     0.021937470, 0.024699726, 0.027446263, 0.030176757, 0.032890796},
    {0.005038137, 0.006579892, 0.008118108, 0.009652793, 0.011183941,
     0.012711533, 0.014235533, 0.015755884, 0.017272505, 0.018785288},
    {0.003491750, 0.004420052, 0.005347296, 0.006273485, 0.007198618,
     0.008122694, 0.009045709, 0.009967653, 0.010888512, 0.011808267},
    {0.002561967, 0.003163657, 0.003764967, 0.004365898, 0.004966452,
     0.005566627, 0.006166424, 0.006765841, 0.007364876, 0.007963526},
}};

const std::array<std::array<std::array<Table4Entry, 3>, 2>, 5> table4 = {{
    {{{{{4.50005714, 4.50005713},
        {6.50008253, 6.50008253},
        {8.50010792, 8.50010792}}},
      {{{4.55432941, 4.55432930},
        {6.57618636, 6.57618592},
        {8.59705146, 8.59705033}}}}},
    {{{{{5.50003175, 5.50003174},
        {7.50004329, 7.50004328},
        {9.50005483, 9.50005483}}},
      {{{5.53112085, 5.53112085},
        {7.54196630, 7.54196634},
        {9.55260775, 9.55260789}}}}},
    {{{{{6.50002020, 6.50002020},
        {8.50002642, 8.50002641},
        {10.50003263, 10.5000326}}},
      {{{6.52000759, 6.52000759},
        {8.52603424, 8.52603424},
        {10.53200890, 10.5320089}}}}},
    {{{{{11.50000501, 11.5000050},
        {13.50000588, 13.5000058},
        {15.50000676, 15.5000067}}},
      {{{11.50500707, 11.5050070},
        {13.50587573, 13.5058757},
        {15.50674384, 15.5067438}}}}},
    {{{{{41.50000031, 41.5000003},
        {43.50000033, 43.5000003},
        {45.50000034, 45.5000003}}},
      {{{41.50031254, 41.5003125},
        {43.50032761, 43.5003276},
        {45.50034267, 45.5003426}}}}},
}};

}  // namespace spiked::reference_tables
