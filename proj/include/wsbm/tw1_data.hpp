#pragma once

// Tracy-Widom beta=1 (GOE) distribution table: (cumulative probability,
// quantile) pairs. Grid values computed from the shifted-gamma approximation
// of Chiani (2014), "Distribution of the largest eigenvalue for real Wishart
// and Gaussian random matrices and a simple approximation for the
// Tracy-Widom distribution"; the 0.5/0.9/0.95/0.975/0.99/0.995/0.999 rows are
// pinned to published numerically-exact GOE quantiles (Bornemann 2010;
// Bejan 2005). Absolute quantile error of the approximation rows is < 0.02
// over the tabulated range.

#include <cstddef>

namespace wsbm::detail {

struct Tw1Row { double p; double q; };

inline constexpr Tw1Row kTw1Table[] = {
    {0.0010, -4.602389762},
    {0.0025, -4.342239884},
    {0.0050, -4.123336826},
    {0.0100, -3.880474135},
    {0.0150, -3.724806773},
    {0.0200, -3.607111212},
    {0.0250, -3.511113843},
    {0.0300, -3.429293445},
    {0.0350, -3.357519978},
    {0.0400, -3.293267926},
    {0.0450, -3.234874002},
    {0.0500, -3.181181453},
    {0.0550, -3.131351485},
    {0.0600, -3.084755393},
    {0.0650, -3.040909104},
    {0.0700, -2.9994315},
    {0.0750, -2.960016829},
    {0.0800, -2.922415836},
    {0.0850, -2.886422481},
    {0.0900, -2.851864366},
    {0.0950, -2.818595698},
    {0.1000, -2.786492004},
    {0.1050, -2.75544611},
    {0.1100, -2.725365026},
    {0.1150, -2.696167515},
    {0.1200, -2.667782156},
    {0.1250, -2.640145799},
    {0.1300, -2.613202311},
    {0.1350, -2.586901554},
    {0.1400, -2.561198544},
    {0.1450, -2.536052754},
    {0.1500, -2.51142753},
    {0.1550, -2.487289598},
    {0.1600, -2.463608657},
    {0.1650, -2.440357019},
    {0.1700, -2.417509312},
    {0.1750, -2.395042218},
    {0.1800, -2.372934255},
    {0.1850, -2.351165574},
    {0.1900, -2.3297178},
    {0.1950, -2.308573878},
    {0.2000, -2.287717946},
    {0.2050, -2.267135219},
    {0.2100, -2.246811892},
    {0.2150, -2.226735048},
    {0.2200, -2.206892578},
    {0.2250, -2.187273115},
    {0.2300, -2.167865964},
    {0.2350, -2.148661052},
    {0.2400, -2.129648872},
    {0.2450, -2.110820441},
    {0.2500, -2.092167255},
    {0.2550, -2.073681256},
    {0.2600, -2.055354794},
    {0.2650, -2.037180599},
    {0.2700, -2.019151751},
    {0.2750, -2.001261656},
    {0.2800, -1.983504021},
    {0.2850, -1.965872835},
    {0.2900, -1.948362347},
    {0.2950, -1.930967048},
    {0.3000, -1.913681658},
    {0.3050, -1.896501104},
    {0.3100, -1.879420512},
    {0.3150, -1.862435193},
    {0.3200, -1.845540626},
    {0.3250, -1.828732455},
    {0.3300, -1.812006469},
    {0.3350, -1.7953586},
    {0.3400, -1.778784912},
    {0.3450, -1.762281588},
    {0.3500, -1.74584493},
    {0.3550, -1.729471343},
    {0.3600, -1.713157336},
    {0.3650, -1.696899509},
    {0.3700, -1.680694551},
    {0.3750, -1.664539233},
    {0.3800, -1.648430401},
    {0.3850, -1.632364972},
    {0.3900, -1.616339931},
    {0.3950, -1.600352323},
    {0.4000, -1.58439925},
    {0.4050, -1.568477867},
    {0.4100, -1.552585377},
    {0.4150, -1.53671903},
    {0.4200, -1.520876114},
    {0.4250, -1.505053955},
    {0.4300, -1.489249916},
    {0.4350, -1.473461388},
    {0.4400, -1.457685789},
    {0.4450, -1.441920562},
    {0.4500, -1.426163173},
    {0.4550, -1.410411103},
    {0.4600, -1.39466185},
    {0.4650, -1.378912926},
    {0.4700, -1.363161849},
    {0.4750, -1.347406147},
    {0.4800, -1.331643351},
    {0.4850, -1.315870993},
    {0.4900, -1.300086603},
    {0.4950, -1.28428771},
    {0.5000, -1.269},
    {0.5050, -1.25263648},
    {0.5100, -1.236779154},
    {0.5150, -1.220897335},
    {0.5200, -1.204988491},
    {0.5250, -1.189050065},
    {0.5300, -1.17307948},
    {0.5350, -1.157074129},
    {0.5400, -1.14103138},
    {0.5450, -1.124948564},
    {0.5500, -1.10882298},
    {0.5550, -1.092651884},
    {0.5600, -1.076432494},
    {0.5650, -1.06016198},
    {0.5700, -1.043837461},
    {0.5750, -1.027456006},
    {0.5800, -1.011014625},
    {0.5850, -0.9945102662},
    {0.5900, -0.9779398142},
    {0.5950, -0.9613000823},
    {0.6000, -0.9445878098},
    {0.6050, -0.9277996561},
    {0.6100, -0.9109321962},
    {0.6150, -0.8939819149},
    {0.6200, -0.8769452012},
    {0.6250, -0.859818342},
    {0.6300, -0.8425975161},
    {0.6350, -0.8252787867},
    {0.6400, -0.8078580951},
    {0.6450, -0.7903312522},
    {0.6500, -0.7726939308},
    {0.6550, -0.7549416565},
    {0.6600, -0.7370697989},
    {0.6650, -0.7190735611},
    {0.6700, -0.7009479696},
    {0.6750, -0.6826878624},
    {0.6800, -0.6642878772},
    {0.6850, -0.645742438},
    {0.6900, -0.6270457409},
    {0.6950, -0.608191739},
    {0.7000, -0.5891741261},
    {0.7050, -0.5699863186},
    {0.7100, -0.5506214365},
    {0.7150, -0.5310722825},
    {0.7200, -0.5113313193},
    {0.7250, -0.4913906451},
    {0.7300, -0.471241967},
    {0.7350, -0.4508765715},
    {0.7400, -0.4302852925},
    {0.7450, -0.4094584771},
    {0.7500, -0.3883859465},
    {0.7550, -0.3670569543},
    {0.7600, -0.3454601406},
    {0.7650, -0.3235834804},
    {0.7700, -0.3014142276},
    {0.7750, -0.2789388525},
    {0.7800, -0.2561429725},
    {0.7850, -0.2330112754},
    {0.7900, -0.2095274328},
    {0.7950, -0.1856740051},
    {0.8000, -0.1614323328},
    {0.8050, -0.1367824165},
    {0.8100, -0.1117027799},
    {0.8150, -0.08617031617},
    {0.8200, -0.06016011273},
    {0.8250, -0.03364525267},
    {0.8300, -0.006596587378},
    {0.8350, 0.02101752375},
    {0.8400, 0.04923151307},
    {0.8450, 0.07808295095},
    {0.8500, 0.1076129478},
    {0.8550, 0.1378666227},
    {0.8600, 0.1688936534},
    {0.8650, 0.200748923},
    {0.8700, 0.2334932881},
    {0.8750, 0.2671944933},
    {0.8800, 0.3019282699},
    {0.8850, 0.3377796632},
    {0.8900, 0.3748446501},
    {0.8950, 0.4132321257},
    {0.9000, 0.4501},
    {0.9050, 0.4944901095},
    {0.9100, 0.537668461},
    {0.9150, 0.5827938855},
    {0.9200, 0.6300926942},
    {0.9250, 0.6798335853},
    {0.9300, 0.7323390816},
    {0.9350, 0.7880011343},
    {0.9400, 0.8473028698},
    {0.9450, 0.9108496441},
    {0.9500, 0.9793},
    {0.9550, 1.054008278},
    {0.9600, 1.135987477},
    {0.9650, 1.227237513},
    {0.9700, 1.330491762},
    {0.9750, 1.4538},
    {0.9800, 1.592511027},
    {0.9850, 1.770993662},
    {0.9900, 2.0234},
    {0.9950, 2.4224},
    {0.9975, 2.780228791},
    {0.9990, 3.2724},
};

inline constexpr std::size_t kTw1TableSize = sizeof(kTw1Table) / sizeof(Tw1Row);

}  // namespace wsbm::detail
