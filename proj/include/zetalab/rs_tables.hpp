#pragma once
// Taylor tables (about p = 1/2) for the saddle-point correction terms used by
// the asymptotic evaluation of Z(t) on the critical line.  Generated by
// scripts/gen_rs_tables.py at 30-digit working precision and rounded once to
// double; exact zeros encode the even/odd symmetry of each correction.

namespace zetalab::detail {

inline constexpr double kRsC0[40] = {
    0.3826834323650897717284600, 0.0,
    1.748961872310081797441186, 0.0,
    2.118025207685496373184564, 0.0,
    -0.8707216670511480739189241, 0.0,
    -3.473311224346516707306412, 0.0,
    -1.662694730899932449643136, 0.0,
    1.216731288919232134476894, 0.0,
    1.301430416100797577300605, 0.0,
    0.03051102182736167242108987, 0.0,
    -0.3755803051545095242798193, 0.0,
    -0.1085784416564065974354698, 0.0,
    0.05183290299954962337576051, 0.0,
    0.02999948061990227592040085, 0.0,
    -0.002275939670612564226019949, 0.0,
    -0.004382647416580338305940070, 0.0,
    -0.0004064230183729846993072327, 0.0,
    0.0004006097785422113927891031, 0.0,
    0.00008971057991388841297834182, 0.0,
    -0.00002302565002723910711610295, 0.0,
    -0.000009380006601906792484719837, -5.375772771651333619012997e-28,
};
inline constexpr double kRsC1[40] = {
    0.0, -0.05365020525675069405998281,
    0.0, 0.1102781874108148243989636,
    0.0, 1.231720015431522631319565,
    0.0, 1.263496486279945788417555,
    0.0, -1.695108997559503018449447,
    0.0, -2.999871196765010088955487,
    0.0, -0.1081994495989920864269226,
    0.0, 1.940766294621271268793876,
    0.0, 0.7838423561500686532884346,
    0.0, -0.5054829667900365918790214,
    0.0, -0.3845072349605797405134274,
    0.0, 0.03747264646531532067594447,
    0.0, 0.09092026610973176317258142,
    0.0, 0.01044923755006450921820114,
    0.0, -0.01258297965158341649747892,
    0.0, -0.003399503721151274085058949,
    0.0, 0.001041095053771489126829543,
    1.058039791787574720588113e-27, 0.0005010949051118486860355710,
    3.111142134196058731269335e-26, -0.00003956359669003181559530302,
    9.072344778576893241173763e-25, -0.00004762459245357189638165588,
};
inline constexpr double kRsC2[40] = {
    0.005188542830293168493784582, 0.0,
    0.001237863355225389841338270, 0.0,
    -0.1813750572516699741149190, 0.0,
    0.1429149274853212654116560, 0.0,
    1.330339176668756532509933, 0.0,
    0.3522472353403733677532766, 0.0,
    -2.421001595891950723781531, 0.0,
    -1.676078702253810885333462, 0.0,
    1.368941672332837218423492, 0.0,
    1.553901943022298322145640, 0.0,
    -0.1722164273472998051958259, 0.0,
    -0.6359068055045430988970490, 0.0,
    -0.09911649873041208105423564, 0.0,
    0.1403348006738700895073825, 0.0,
    0.04782352019827292236438803, -5.598650576336663631093304e-28,
    -0.01735604064147978079795865, -2.004680235457899128035123e-26,
    -0.01022501253402859184447672, -7.033465170140991296495617e-25,
    0.0009274149159794887899385628, -2.423300134823322663318344e-23,
    0.001357219437237338534383977, -8.214115486338563284193434e-22,
    0.00006413690120293879614407574, -2.743563346249909484636001e-20,
};
inline constexpr double kRsC3[40] = {
    0.0, -0.002679432181438913808539671,
    0.0, 0.02995372109103514963731329,
    0.0, -0.04257017254182869798501935,
    0.0, -0.2899796577980388750689321,
    0.0, 0.4888831999235445972537475,
    0.0, 1.230855876395746081193125,
    0.0, -0.8297560708527408704179691,
    0.0, -2.249763536666566866520450,
    0.0, 0.07845139961005471379365474,
    0.0, 1.746749280086889400391987,
    0.0, 0.4596808097974993510923731,
    0.0, -0.6619353471039774946433904,
    0.0, -0.3159044103617363457897963,
    4.318340625748141265172858e-27, 0.1284479254520749598851185,
    1.902122824786373291412596e-25, 0.1007338271662615230096957,
    8.100401066242589750804674e-24, -0.009530183848825267759452400,
    3.347949994246685366668962e-22, -0.01926442168751408889627047,
    1.347235054952854707982520e-20, -0.001246463715876929086564471,
    5.292669624372876323527032e-19, 0.002424396964110311863975798,
    2.034643833609673571050117e-17, 0.0004376476977419822249204673,
};

}  // namespace zetalab::detail
