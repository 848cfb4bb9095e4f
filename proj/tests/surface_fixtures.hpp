// Frozen reference outputs for the analytical surfaces: 32 unscrambled
// Sobol points per surface (zero point skipped), verified once against an
// independent extended-precision transcription of the published closed forms.
#pragma once

#include <vector>

namespace fixtures {

struct SurfaceCase {
    const char* name;
    std::vector<std::vector<double>> x;
    std::vector<std::vector<double>> y;
};

inline const std::vector<SurfaceCase>& surface_cases() {
    static const std::vector<SurfaceCase> cases = {
        {"BNH",
         {
             {2.5, 1.5},
             {3.75, 0.75},
             {1.25, 2.25},
             {1.875, 1.125},
             {4.375, 2.625},
             {3.125, 0.375},
             {0.625, 1.875},
             {0.9375, 0.9375},
             {3.4375, 2.4375},
             {4.6875, 0.1875},
             {2.1875, 1.6875},
             {1.5625, 0.5625},
             {4.0625, 2.0625},
             {2.8125, 1.3125},
             {0.3125, 2.8125},
             {0.46875, 1.40625},
             {2.96875, 2.90625},
             {4.21875, 0.65625},
             {1.71875, 2.15625},
             {2.34375, 0.28125},
             {4.84375, 1.78125},
             {3.59375, 1.03125},
             {1.09375, 2.53125},
             {0.78125, 0.46875},
             {3.28125, 1.96875},
             {4.53125, 1.21875},
             {2.03125, 2.71875},
             {1.40625, 0.84375},
             {3.90625, 2.34375},
             {2.65625, 0.09375},
             {0.15625, 1.59375},
             {0.234375, 0.796875},
         },
         {
             {-34.0, -18.5},
             {-58.5, -19.625},
             {-26.5, -21.625},
             {-19.125, -24.78125},
             {-104.125, -6.03125},
             {-39.625, -24.90625},
             {-15.625, -28.90625},
             {-7.03125, -33.0078125},
             {-71.03125, -9.0078125},
             {-88.03125, -23.2578125},
             {-30.53125, -18.8828125},
             {-11.03125, -31.5078125},
             {-83.03125, -9.5078125},
             {-38.53125, -18.3828125},
             {-32.03125, -26.7578125},
             {-8.7890625, -33.447265625},
             {-69.0390625, -8.509765625},
             {-72.9140625, -19.478515625},
             {-30.4140625, -18.853515625},
             {-22.2890625, -29.322265625},
             {-106.5390625, -10.384765625},
             {-55.9140625, -17.728515625},
             {-30.4140625, -21.353515625},
             {-3.3203125, -38.330078125},
             {-58.5703125, -12.142578125},
             {-88.0703125, -14.517578125},
             {-46.0703125, -14.017578125},
             {-10.7578125, -30.189453125},
             {-83.0078125, -8.251953125},
             {-28.2578125, -29.564453125},
             {-10.2578125, -35.064453125},
             {-2.759765625, -40.37744140625},
         }},
        {"DH4",
         {
             {0.5, 0.42499999999999993, 0, 0, 0, 0},
             {0.75, 0.13749999999999998, -0.5, -0.5, 0.5, 0.5},
             {0.25, 0.71249999999999991, 0.5, 0.5, -0.5, -0.5},
             {0.375, 0.28125, 0.25, 0.75, -0.25, -0.75},
             {0.875, 0.85624999999999984, -0.75, -0.25, 0.75, 0.25},
             {0.625, -0.0062500000000000056, 0.75, 0.25, 0.25, 0.75},
             {0.125, 0.56874999999999998, -0.25, -0.75, -0.75, -0.25},
             {0.1875, 0.20937500000000001, 0.875, -0.125, 0.125, -0.375},
             {0.6875, 0.78437499999999993, -0.125, 0.875, -0.875, 0.625},
             {0.9375, -0.078125, 0.375, -0.625, -0.375, 0.125},
             {0.4375, 0.49687499999999996, -0.625, 0.375, 0.625, -0.875},
             {0.3125, 0.065624999999999989, -0.375, 0.125, 0.875, -0.125},
             {0.8125, 0.64062499999999989, 0.625, -0.875, -0.125, 0.875},
             {0.5625, 0.35312499999999991, -0.875, 0.625, -0.625, 0.375},
             {0.0625, 0.92812499999999998, 0.125, -0.375, 0.375, -0.625},
             {0.09375, 0.38906249999999998, -0.0625, 0.3125, -0.4375, 0.9375},
             {0.59375, 0.96406249999999993, 0.9375, -0.6875, 0.5625, -0.0625},
             {0.84375, 0.10156249999999997, -0.5625, 0.8125, 0.0625, -0.5625},
             {0.34375, 0.67656249999999996, 0.4375, -0.1875, -0.9375, 0.4375},
             {0.46875, -0.042187500000000003, 0.6875, -0.4375, -0.6875, 0.6875},
             {0.96875, 0.53281249999999991, -0.3125, 0.5625, 0.3125, -0.3125},
             {0.71875, 0.24531249999999996, 0.1875, -0.9375, 0.8125, -0.8125},
             {0.21875, 0.82031249999999989, -0.8125, 0.0625, -0.1875, 0.1875},
             {0.15625, 0.029687500000000006, 0.0625, 0.6875, 0.6875, 0.3125},
             {0.65625, 0.60468749999999993, -0.9375, -0.3125, -0.3125, -0.6875},
             {0.90625, 0.31718749999999996, 0.5625, 0.1875, -0.8125, -0.1875},
             {0.40625, 0.8921874999999998, -0.4375, -0.8125, 0.1875, 0.8125},
             {0.28125, 0.17343749999999999, -0.6875, -0.5625, 0.4375, 0.0625},
             {0.78125, 0.74843749999999987, 0.3125, 0.4375, -0.5625, -0.9375},
             {0.53125, -0.1140625, -0.1875, -0.0625, -0.0625, -0.4375},
             {0.03125, 0.46093749999999989, 0.8125, 0.9375, 0.9375, 0.5625},
             {0.046875, 0.15546874999999996, 0.40625, 0.09375, -0.71875, 0.84375},
         },
         {
             {-0.92499999999999993, -0.58403966278841616},
             {-0.88749999999999998, -89.365116057757599},
             {-0.96249999999999991, -100.90006900532917},
             {-0.65625, -114.55656787192785},
             {-1.7312499999999998, -125.12917130661026},
             {-0.61874999999999999, -109.62307363031572},
             {-0.69374999999999998, -118.66594322370692},
             {-0.39687500000000001, -58.241508514399435},
             {-1.4718749999999999, -194.09168746538019},
             {-0.859375, -37.174625163151486},
             {-0.93437499999999996, -169.10889146120397},
             {-0.37812499999999999, -57.255235041825915},
             {-1.4531249999999999, -193.94722409064776},
             {-0.91562499999999991, -168.13812323501156},
             {-0.99062499999999998, -70.210467668343849},
             {-0.48281249999999998, -82.807992629092431},
             {-1.5578124999999999, -167.64639649436451},
             {-0.94531249999999997, -129.66867946201191},
             {-1.0203125, -130.4754927292392},
             {-0.4265625, -102.7266864083314},
             {-1.5015624999999999, -60.968998016620268},
             {-0.96406249999999996, -223.52725469599755},
             {-1.0390624999999999, -74.487125688725743},
             {-0.18593750000000001, -78.360456018427936},
             {-1.2609374999999999, -155.06720853604982},
             {-1.2234375, -104.78334720176955},
             {-1.2984374999999998, -155.41271021188485},
             {-0.45468749999999999, -66.019534709198044},
             {-1.5296874999999999, -148.66973303432729},
             {-0.4171875, -15.056220219407048},
             {-0.49218749999999989, -195.460467176357},
             {-0.20234374999999996, -101.78459299922569},
         }},
        {"DTLZ5",
         {
             {0.5, 0.5, 0.5, 0.5},
             {0.75, 0.25, 0.25, 0.25},
             {0.25, 0.75, 0.75, 0.75},
             {0.375, 0.375, 0.625, 0.875},
             {0.875, 0.875, 0.125, 0.375},
             {0.625, 0.125, 0.875, 0.625},
             {0.125, 0.625, 0.375, 0.125},
             {0.1875, 0.3125, 0.9375, 0.4375},
             {0.6875, 0.8125, 0.4375, 0.9375},
             {0.9375, 0.0625, 0.6875, 0.1875},
             {0.4375, 0.5625, 0.1875, 0.6875},
             {0.3125, 0.1875, 0.3125, 0.5625},
             {0.8125, 0.6875, 0.8125, 0.0625},
             {0.5625, 0.4375, 0.0625, 0.8125},
             {0.0625, 0.9375, 0.5625, 0.3125},
             {0.09375, 0.46875, 0.46875, 0.65625},
             {0.59375, 0.96875, 0.96875, 0.15625},
             {0.84375, 0.21875, 0.21875, 0.90625},
             {0.34375, 0.71875, 0.71875, 0.40625},
             {0.46875, 0.09375, 0.84375, 0.28125},
             {0.96875, 0.59375, 0.34375, 0.78125},
             {0.71875, 0.34375, 0.59375, 0.03125},
             {0.21875, 0.84375, 0.09375, 0.53125},
             {0.15625, 0.15625, 0.53125, 0.84375},
             {0.65625, 0.65625, 0.03125, 0.34375},
             {0.90625, 0.40625, 0.78125, 0.59375},
             {0.40625, 0.90625, 0.28125, 0.09375},
             {0.28125, 0.28125, 0.15625, 0.21875},
             {0.78125, 0.78125, 0.65625, 0.71875},
             {0.53125, 0.03125, 0.40625, 0.46875},
             {0.03125, 0.53125, 0.90625, 0.96875},
             {0.046875, 0.265625, 0.703125, 0.546875},
         },
         {
             {-0.70710678118654752, -0.70710678118654752},
             {-0.4544365759335441, -1.097106944857153},
             {-1.097106944857153, -0.4544365759335441},
             {-0.9743784519170452, -0.65105886681984636},
             {-0.25300776136466635, -1.2719559105229395},
             {-0.72050514594729664, -1.0783121534548634},
             {-1.1493577504725357, -0.22862147111265031},
             {-1.1774851787329914, -0.35718622396545174},
             {-0.60950124956798915, -1.1402966347629122},
             {-0.12979613504578533, -1.3178422747729482},
             {-0.87869547628342365, -0.72112674098289391},
             {-1.0024964372084817, -0.53584550943892701},
             {-0.38440041245805759, -1.267198335207886},
             {-0.82025069163346352, -0.9994783596213513},
             {-1.2245437066474298, -0.12060702813988902},
             {-1.015258312473618, -0.15059934438729024},
             {-0.92787147525921014, -1.2510898561636998},
             {-0.32152162477433845, -1.2835862774205148},
             {-0.94735454874053487, -0.56782246453372439},
             {-0.9862464686121184, -0.89388169478172469},
             {-0.054578204159110467, -1.1109648677907142},
             {-0.53569646960063665, -1.1326350225365018},
             {-1.2091117633942113, -0.43262710665114196},
             {-1.2002242165991086, -0.30064051556390171},
             {-0.65216744600292483, -1.0880756488187045},
             {-0.16091633087243286, -1.0848097858305166},
             {-1.1067635028507715, -0.82083175648322602},
             {-1.1255726061839749, -0.53235619543321257},
             {-0.38788392299748773, -1.0840629422370913},
             {-0.82567648843007438, -0.91099361994325537},
             {-1.384073000346816, -0.06799514635801383},
             {-1.0954125401849188, -0.080802483309302671},
         }},
        {"ZDT1",
         {
             {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
             {0.75, 0.25, 0.25, 0.25, 0.75, 0.75, 0.25, 0.75, 0.75, 0.75},
             {0.25, 0.75, 0.75, 0.75, 0.25, 0.25, 0.75, 0.25, 0.25, 0.25},
             {0.375, 0.375, 0.625, 0.875, 0.375, 0.125, 0.375, 0.875, 0.875, 0.625},
             {0.875, 0.875, 0.125, 0.375, 0.875, 0.625, 0.875, 0.375, 0.375, 0.125},
             {0.625, 0.125, 0.875, 0.625, 0.625, 0.875, 0.125, 0.125, 0.125, 0.375},
             {0.125, 0.625, 0.375, 0.125, 0.125, 0.375, 0.625, 0.625, 0.625, 0.875},
             {0.1875, 0.3125, 0.9375, 0.4375, 0.5625, 0.3125, 0.4375, 0.9375, 0.9375, 0.3125},
             {0.6875, 0.8125, 0.4375, 0.9375, 0.0625, 0.8125, 0.9375, 0.4375, 0.4375, 0.8125},
             {0.9375, 0.0625, 0.6875, 0.1875, 0.3125, 0.5625, 0.1875, 0.1875, 0.1875, 0.5625},
             {0.4375, 0.5625, 0.1875, 0.6875, 0.8125, 0.0625, 0.6875, 0.6875, 0.6875, 0.0625},
             {0.3125, 0.1875, 0.3125, 0.5625, 0.9375, 0.4375, 0.0625, 0.0625, 0.0625, 0.9375},
             {0.8125, 0.6875, 0.8125, 0.0625, 0.4375, 0.9375, 0.5625, 0.5625, 0.5625, 0.4375},
             {0.5625, 0.4375, 0.0625, 0.8125, 0.1875, 0.6875, 0.3125, 0.8125, 0.8125, 0.1875},
             {0.0625, 0.9375, 0.5625, 0.3125, 0.6875, 0.1875, 0.8125, 0.3125, 0.3125, 0.6875},
             {0.09375, 0.46875, 0.46875, 0.65625, 0.28125, 0.96875, 0.53125, 0.84375, 0.46875, 0.15625},
             {0.59375, 0.96875, 0.96875, 0.15625, 0.78125, 0.46875, 0.03125, 0.34375, 0.96875, 0.65625},
             {0.84375, 0.21875, 0.21875, 0.90625, 0.53125, 0.21875, 0.78125, 0.09375, 0.71875, 0.90625},
             {0.34375, 0.71875, 0.71875, 0.40625, 0.03125, 0.71875, 0.28125, 0.59375, 0.21875, 0.40625},
             {0.46875, 0.09375, 0.84375, 0.28125, 0.15625, 0.84375, 0.90625, 0.21875, 0.59375, 0.53125},
             {0.96875, 0.59375, 0.34375, 0.78125, 0.65625, 0.34375, 0.40625, 0.71875, 0.09375, 0.03125},
             {0.71875, 0.34375, 0.59375, 0.03125, 0.90625, 0.09375, 0.65625, 0.96875, 0.34375, 0.28125},
             {0.21875, 0.84375, 0.09375, 0.53125, 0.40625, 0.59375, 0.15625, 0.46875, 0.84375, 0.78125},
             {0.15625, 0.15625, 0.53125, 0.84375, 0.84375, 0.65625, 0.96875, 0.15625, 0.53125, 0.46875},
             {0.65625, 0.65625, 0.03125, 0.34375, 0.34375, 0.15625, 0.46875, 0.65625, 0.03125, 0.96875},
             {0.90625, 0.40625, 0.78125, 0.59375, 0.09375, 0.40625, 0.71875, 0.90625, 0.28125, 0.71875},
             {0.40625, 0.90625, 0.28125, 0.09375, 0.59375, 0.90625, 0.21875, 0.40625, 0.78125, 0.21875},
             {0.28125, 0.28125, 0.15625, 0.21875, 0.71875, 0.53125, 0.59375, 0.78125, 0.40625, 0.84375},
             {0.78125, 0.78125, 0.65625, 0.71875, 0.21875, 0.03125, 0.09375, 0.28125, 0.90625, 0.34375},
             {0.53125, 0.03125, 0.40625, 0.46875, 0.46875, 0.28125, 0.84375, 0.03125, 0.65625, 0.09375},
             {0.03125, 0.53125, 0.90625, 0.96875, 0.96875, 0.78125, 0.34375, 0.53125, 0.15625, 0.59375},
             {0.046875, 0.265625, 0.703125, 0.546875, 0.140625, 0.921875, 0.796875, 0.671875, 0.984375, 0.046875},
         },
         {
             {-0.5, -3.8416876048223001},
             {-0.75, -3.6733440342704813},
             {-0.25, -4.10435607626104},
             {-0.375, -4.6094555433772324},
             {-0.875, -3.406470081337644},
             {-0.625, -3.1294699945288824},
             {-0.125, -4.5553201844622499},
             {-0.1875, -5.1103945037741196},
             {-0.6875, -4.5432854001989446},
             {-0.9375, -2.0161967313825753},
             {-0.4375, -3.8951296650933668},
             {-0.3125, -3.368439176591075},
             {-0.8125, -3.843089886929412},
             {-0.5625, -3.5838354142575836},
             {-0.0625, -5.2097718274379403},
             {-0.09375, -5.1035800448545618},
             {-0.59375, -4.4029765555969703},
             {-0.84375, -3.4212568325769123},
             {-0.34375, -3.7705052900162419},
             {-0.46875, -3.8676639428188128},
             {-0.96875, -2.7747863351914873},
             {-0.71875, -3.282006195956729},
             {-0.21875, -4.60027936448917},
             {-0.15625, -5.175477823345299},
             {-0.65625, -2.9082042161316255},
             {-0.90625, -3.5926944976400501},
             {-0.40625, -3.924261787327578},
             {-0.28125, -4.2839873722828059},
             {-0.78125, -3.0486597593047624},
             {-0.53125, -2.7731339359982933},
             {-0.03125, -6.3209087542919926},
             {-0.046875, -5.5443534108581649},
         }},
    };
    return cases;
}

}  // namespace fixtures
