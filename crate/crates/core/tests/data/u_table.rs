// (a, b, x, U) computed at 30 digits
pub const U_TABLE: &[(f64, f64, f64, f64)] = &[
    (-2.5, 0.25, 1e-06, 4.4376799722972892e-1),
    (-2.5, 0.25, 0.01, 5.5961414021663271e-1),
    (-2.5, 0.25, 0.3, 8.2361513629634825e-1),
    (-2.5, 0.25, 1.0, -8.2221409603302693e-1),
    (-2.5, 0.25, 2.0, -3.1691549645932999),
    (-2.5, 0.25, 5.0, 1.253511537734443e+1),
    (-2.5, 0.25, 9.0, 1.3229143780850084e+2),
    (-2.5, 0.25, 16.0, 7.5386914419434564e+2),
    (-2.5, 0.25, 25.0, 2.5904500704262055e+3),
    (-2.5, 0.25, 40.0, 9.0280718173907414e+3),
    (-2.5, 0.25, 64.0, 3.054770028641365e+4),
    (-2.5, 0.25, 200.0, 5.5334586643532106e+5),
    (-2.5, 0.5, 1e-06, 3.7499950000009999e-3),
    (-2.5, 0.5, 0.01, 3.7001e-1),
    (-2.5, 0.5, 0.3, 1.2816707845620887),
    (-2.5, 0.5, 1.0, -2.5e-1),
    (-2.5, 0.5, 2.0, -3.1819805153394639),
    (-2.5, 0.5, 5.0, 8.3852549156242114),
    (-2.5, 0.5, 9.0, 1.1925e+2),
    (-2.5, 0.5, 16.0, 7.19e+2),
    (-2.5, 0.5, 25.0, 2.51875e+3),
    (-2.5, 0.5, 40.0, 8.878094530922725e+3),
    (-2.5, 0.5, 64.0, 3.0238e+4),
    (-2.5, 0.5, 200.0, 5.5159632233409606e+5),
    (-2.5, 0.75, 1e-06, -1.9163396420971427),
    (-2.5, 0.75, 0.01, -4.0098290892662406e-1),
    (-2.5, 0.75, 0.3, 1.6740434656100994),
    (-2.5, 0.75, 1.0, 4.4352171204716278e-1),
    (-2.5, 0.75, 2.0, -2.9446663601732458),
    (-2.5, 0.75, 5.0, 4.7074697227722825),
    (-2.5, 0.75, 9.0, 1.0687279348941238e+2),
    (-2.5, 0.75, 16.0, 6.8503913034318877e+2),
    (-2.5, 0.75, 25.0, 2.4481984036695662e+3),
    (-2.5, 0.75, 40.0, 8.7295810512268246e+3),
    (-2.5, 0.75, 64.0, 2.9930160074088528e+4),
    (-2.5, 0.75, 200.0, 5.498500845111187e+5),
    (-2.5, 1.25, 1e-06, -1.1640493599632312e+2),
    (-2.5, 1.25, 0.01, -6.9035697228748384),
    (-2.5, 1.25, 0.3, 1.9267114973287138),
    (-2.5, 1.25, 1.0, 2.0480173088778129),
    (-2.5, 1.25, 2.0, -1.8143031088550051),
    (-2.5, 1.25, 5.0, -1.2875926522940325),
    (-2.5, 1.25, 9.0, 8.4070591863694369e+1),
    (-2.5, 1.25, 16.0, 6.1981230610605884e+2),
    (-2.5, 1.25, 25.0, 2.3105168794643673e+3),
    (-2.5, 1.25, 40.0, 8.4369268258043078e+3),
    (-2.5, 1.25, 64.0, 2.9320046577234812e+4),
    (-2.5, 1.25, 200.0, 5.4636751939929087e+5),
    (-2.5, 1.5, 1e-06, -1.8749887500075e+3),
    (-2.5, 1.5, 0.01, -1.763249e+1),
    (-2.5, 1.5, 0.3, 1.5555320633146716),
    (-2.5, 1.5, 1.0, 2.875),
    (-2.5, 1.5, 2.0, -9.7227182413150285e-1),
    (-2.5, 1.5, 5.0, -3.6336104634371583),
    (-2.5, 1.5, 9.0, 7.3625e+1),
    (-2.5, 1.5, 16.0, 5.8853125e+2),
    (-2.5, 1.5, 25.0, 2.243375e+3),
    (-2.5, 1.5, 40.0, 8.292776700260934e+3),
    (-2.5, 1.5, 64.0, 2.9017765625e+4),
    (-2.5, 1.5, 200.0, 5.4463118795688709e+5),
    (-2.5, 1.75, 1e-06, -4.1001522251414165e+4),
    (-2.5, 1.75, 0.01, -4.4598100958765346e+1),
    (-2.5, 1.75, 0.3, 6.2945144037691502e-1),
    (-2.5, 1.75, 1.0, 3.653199358176862),
    (-2.5, 1.75, 2.0, 1.7433354541489215e-2),
    (-2.5, 1.75, 5.0, -5.5650817355614825),
    (-2.5, 1.75, 9.0, 6.3802434785906754e+1),
    (-2.5, 1.75, 16.0, 5.5812826271117857e+2),
    (-2.5, 1.75, 25.0, 2.1773576905752479e+3),
    (-2.5, 1.75, 40.0, 8.1500716215849913e+3),
    (-2.5, 1.75, 64.0, 2.871733027059844e+4),
    (-2.5, 1.75, 200.0, 5.4289815448561948e+5),
    (-2.5, 2.5, 1e-06, -9.3750749997750007e+8),
    (-2.5, 2.5, 0.01, -1.01025999e+3),
    (-2.5, 2.5, 0.3, -8.6686223434484297),
    (-2.5, 2.5, 1.0, 5.0625),
    (-2.5, 2.5, 2.0, 3.5576309928448172),
    (-2.5, 2.5, 5.0, -9.0281244591554009),
    (-2.5, 2.5, 9.0, 3.7965277777777778e+1),
    (-2.5, 2.5, 16.0, 4.721103515625e+2),
    (-2.5, 2.5, 25.0, 1.9859925e+3),
    (-2.5, 2.5, 40.0, 7.7305793191949913e+3),
    (-2.5, 2.5, 64.0, 2.7827060668945313e+4),
    (-2.5, 2.5, 200.0, 5.3771882109176787e+5),
    (-1.3, 0.25, 1e-06, -3.424895128435005e-1),
    (-1.3, 0.25, 0.01, -3.7044457466070271e-1),
    (-1.3, 0.25, 0.3, -3.599085105002343e-1),
    (-1.3, 0.25, 1.0, 2.4603319975988563e-1),
    (-1.3, 0.25, 2.0, 1.5558541610259056),
    (-1.3, 0.25, 5.0, 6.9297632387771002),
    (-1.3, 0.25, 9.0, 1.6006398447050812e+1),
    (-1.3, 0.25, 16.0, 3.5108916786281204e+1),
    (-1.3, 0.25, 25.0, 6.3780223173394156e+1),
    (-1.3, 0.25, 40.0, 1.1880412667581043e+2),
    (-1.3, 0.25, 64.0, 2.2036855732096806e+2),
    (-1.3, 0.25, 200.0, 9.767492460853136e+2),
    (-1.3, 0.5, 1e-06, -3.0993190579130079e-1),
    (-1.3, 0.5, 0.01, -4.0678341476044298e-1),
    (-1.3, 0.5, 0.3, -5.6425124261315822e-1),
    (-1.3, 0.5, 1.0, -6.599926885357589e-2),
    (-1.3, 0.5, 2.0, 1.1646457689643499),
    (-1.3, 0.5, 5.0, 6.4081726243092353),
    (-1.3, 0.5, 9.0, 1.5381617496751686e+1),
    (-1.3, 0.5, 16.0, 3.436464910369141e+1),
    (-1.3, 0.5, 25.0, 6.2928363712565143e+1),
    (-1.3, 0.5, 40.0, 1.1782252080758849e+2),
    (-1.3, 0.5, 64.0, 2.1923776360809693e+2),
    (-1.3, 0.5, 200.0, 9.7515674918871247e+2),
    (-1.3, 0.75, 1e-06, 1.3796888072071182e-1),
    (-1.3, 0.75, 0.01, -2.8045390215869087e-1),
    (-1.3, 0.75, 0.3, -7.2509321635794649e-1),
    (-1.3, 0.75, 1.0, -3.5617841661985855e-1),
    (-1.3, 0.75, 2.0, 7.8755531311954612e-1),
    (-1.3, 0.75, 5.0, 5.8942768916719837),
    (-1.3, 0.75, 9.0, 1.4761994029413057e+1),
    (-1.3, 0.75, 16.0, 3.3623851423584659e+1),
    (-1.3, 0.75, 25.0, 6.2079050981293618e+1),
    (-1.3, 0.75, 40.0, 1.1684275145061567e+2),
    (-1.3, 0.75, 64.0, 2.1810829323968163e+2),
    (-1.3, 0.75, 200.0, 9.7356484921750866e+2),
    (-1.3, 1.25, 1e-06, 3.232385473589629e+1),
    (-1.3, 1.25, 0.01, 1.2725346757355268),
    (-1.3, 1.25, 0.3, -8.712175967434519e-1),
    (-1.3, 1.25, 1.0, -8.6081615266811042e-1),
    (-1.3, 1.25, 2.0, 7.956601935613167e-2),
    (-1.3, 1.25, 5.0, 4.8905239431371414),
    (-1.3, 1.25, 9.0, 1.3538592568197076e+1),
    (-1.3, 1.25, 16.0, 3.2152811528569976e+1),
    (-1.3, 1.25, 25.0, 6.0388135047220913e+1),
    (-1.3, 1.25, 40.0, 1.1488875384307538e+2),
    (-1.3, 1.25, 64.0, 2.1585333684873285e+2),
    (-1.3, 1.25, 200.0, 9.7038284213295074e+2),
    (-1.3, 1.5, 1e-06, 5.3141893028594306e+2),
    (-1.3, 1.5, 0.01, 4.0318346369741527),
    (-1.3, 1.5, 0.3, -8.2122197436744677e-1),
    (-1.3, 1.5, 1.0, -1.0687605977708712),
    (-1.3, 1.5, 2.0, -2.490770776304699e-1),
    (-1.3, 1.5, 5.0, 4.4011845833981439),
    (-1.3, 1.5, 9.0, 1.2935010732962716e+1),
    (-1.3, 1.5, 16.0, 3.14226442722739e+1),
    (-1.3, 1.5, 25.0, 5.9546567213074111e+1),
    (-1.3, 1.5, 40.0, 1.1391454158150005e+2),
    (-1.3, 1.5, 64.0, 2.147278580405905e+2),
    (-1.3, 1.5, 200.0, 9.687927360631708e+2),
    (-1.3, 1.75, 1e-06, 1.1643148877634083e+4),
    (-1.3, 1.75, 0.01, 1.1192709392765528e+1),
    (-1.3, 1.75, 0.3, -6.5131172238020347e-1),
    (-1.3, 1.75, 1.0, -1.2414755654934849),
    (-1.3, 1.75, 2.0, -5.5903796409111962e-1),
    (-1.3, 1.75, 5.0, 3.9205791087811333),
    (-1.3, 1.75, 9.0, 1.2336979177904736e+1),
    (-1.3, 1.75, 16.0, 3.0696097002736673e+1),
    (-1.3, 1.75, 25.0, 5.87076168597607e+1),
    (-1.3, 1.75, 40.0, 1.1294219781176014e+2),
    (-1.3, 1.75, 64.0, 2.1360371700616128e+2),
    (-1.3, 1.75, 200.0, 9.6720322900594383e+2),
    (-1.3, 2.5, 1e-06, 2.6626787399232617e+8),
    (-1.3, 2.5, 0.01, 2.7884458114256152e+2),
    (-1.3, 2.5, 0.3, 1.1955821906990914),
    (-1.3, 2.5, 1.0, -1.4843422127198702),
    (-1.3, 2.5, 2.0, -1.3595275391060023),
    (-1.3, 2.5, 5.0, 2.5343608969866336),
    (-1.3, 2.5, 9.0, 1.0577298940999196e+1),
    (-1.3, 2.5, 16.0, 2.8538578881617176e+1),
    (-1.3, 2.5, 25.0, 5.6206656370030903e+1),
    (-1.3, 2.5, 40.0, 1.1003645991492732e+2),
    (-1.3, 2.5, 64.0, 2.1023935733005489e+2),
    (-1.3, 2.5, 200.0, 9.6243830716063031e+2),
    (-0.4, 0.25, 1e-06, 4.8132307365252914e-1),
    (-0.4, 0.25, 0.01, 5.1470701101139084e-1),
    (-0.4, 0.25, 0.3, 7.9278068828846264e-1),
    (-0.4, 0.25, 1.0, 1.1100838817495708),
    (-0.4, 0.25, 2.0, 1.3993742687626505),
    (-0.4, 0.25, 5.0, 1.9534191837105054),
    (-0.4, 0.25, 9.0, 2.4441920315580651),
    (-0.4, 0.25, 16.0, 3.0573333199113854),
    (-0.4, 0.25, 25.0, 3.6438785903804027),
    (-0.4, 0.25, 40.0, 4.3886049913557488),
    (-0.4, 0.25, 64.0, 5.2895056590834707),
    (-0.4, 0.25, 200.0, 8.3313482181916964),
    (-0.4, 0.5, 1e-06, 1.8726120370675864e-1),
    (-0.4, 0.5, 0.01, 2.8009626647212256e-1),
    (-0.4, 0.5, 0.3, 6.7141740342657712e-1),
    (-0.4, 0.5, 1.0, 1.0326617699281754),
    (-0.4, 0.5, 2.0, 1.3428827023800536),
    (-0.4, 0.5, 5.0, 1.9180438451253825),
    (-0.4, 0.5, 9.0, 2.4185759114533725),
    (-0.4, 0.5, 16.0, 3.0388651773403773),
    (-0.4, 0.5, 25.0, 3.6296231997872367),
    (-0.4, 0.5, 40.0, 4.3777866259227057),
    (-0.4, 0.5, 64.0, 5.2813136922852693),
    (-0.4, 0.5, 200.0, 8.3271944482407695),
    (-0.4, 0.75, 1e-06, -4.472187031494789e-1),
    (-0.4, 0.75, 0.01, -7.0397616934891357e-2),
    (-0.4, 0.75, 0.3, 5.3083867120899017e-1),
    (-0.4, 0.75, 1.0, 9.4898787681538742e-1),
    (-0.4, 0.75, 2.0, 1.2835496302382064),
    (-0.4, 0.75, 5.0, 1.8818021504327858),
    (-0.4, 0.75, 9.0, 2.3925828538447316),
    (-0.4, 0.75, 16.0, 3.0202363719323222),
    (-0.4, 0.75, 25.0, 3.6152864085420117),
    (-0.4, 0.75, 40.0, 4.3669289575823465),
    (-0.4, 0.75, 64.0, 5.2731029082230163),
    (-0.4, 0.75, 200.0, 8.3230375833458023),
    (-0.4, 1.25, 1e-06, -2.9544354009098031e+1),
    (-0.4, 1.25, 0.01, -1.8055295852770628),
    (-0.4, 1.25, 0.3, 1.6320926695838467e-1),
    (-0.4, 1.25, 1.0, 7.580841002274087e-1),
    (-0.4, 1.25, 2.0, 1.1549739183981403),
    (-0.4, 1.25, 5.0, 1.8065072717419363),
    (-0.4, 1.25, 9.0, 2.3394093027408643),
    (-0.4, 1.25, 16.0, 2.9824822854095543),
    (-0.4, 1.25, 25.0, 3.5863637636937686),
    (-0.4, 1.25, 40.0, 4.3450942090505343),
    (-0.4, 1.25, 64.0, 5.2566244311798608),
    (-0.4, 1.25, 200.0, 8.3147145441966943),
    (-0.4, 1.5, 1e-06, -4.7574841632975233e+2),
    (-0.4, 1.5, 0.01, -4.3406612855251587),
    (-0.4, 1.5, 0.3, -8.7409537618027938e-2),
    (-0.4, 1.5, 1.0, 6.4763968752092996e-1),
    (-0.4, 1.5, 2.0, 1.0848852874863801),
    (-0.4, 1.5, 5.0, 1.7673355734352076),
    (-0.4, 1.5, 9.0, 2.3121984441439042),
    (-0.4, 1.5, 16.0, 2.9633494399242842),
    (-0.4, 1.5, 25.0, 3.5717754079106589),
    (-0.4, 1.5, 40.0, 4.3341163629253697),
    (-0.4, 1.5, 64.0, 5.2483565068448881),
    (-0.4, 1.5, 200.0, 8.3105483576298456),
    (-0.4, 1.75, 1e-06, -1.0409318489396277e+4),
    (-0.4, 1.75, 0.01, -1.067796812820428e+1),
    (-0.4, 1.75, 0.3, -4.0882737643086555e-1),
    (-0.4, 1.75, 1.0, 5.2429668128305991e-1),
    (-0.4, 1.75, 2.0, 1.0102357735814009),
    (-0.4, 1.75, 5.0, 1.7270593070473106),
    (-0.4, 1.75, 9.0, 2.2845497919286597),
    (-0.4, 1.75, 16.0, 2.944040790670339),
    (-0.4, 1.75, 25.0, 3.5571006452688327),
    (-0.4, 1.75, 40.0, 4.323097681785772),
    (-0.4, 1.75, 64.0, 5.240069302507835),
    (-0.4, 1.75, 200.0, 8.3063790514933667),
    (-0.4, 2.5, 1e-06, -2.3804321899662859e+8),
    (-0.4, 2.5, 0.01, -2.4658238954427412e+2),
    (-0.4, 2.5, 0.3, -2.2473443105944727),
    (-0.4, 2.5, 1.0, 4.2063938346037078e-2),
    (-0.4, 2.5, 2.0, 7.5180939328695105e-1),
    (-0.4, 2.5, 5.0, 1.5988212386561595),
    (-0.4, 2.5, 9.0, 2.1987963221176727),
    (-0.4, 2.5, 16.0, 2.8850179436965218),
    (-0.4, 2.5, 25.0, 3.5125444808765315),
    (-0.4, 2.5, 40.0, 4.289792618378676),
    (-0.4, 2.5, 64.0, 5.2150908182568522),
    (-0.4, 2.5, 200.0, 8.2938523535068367),
    (0.05, 0.25, 1e-06, 1.0525481287434683),
    (0.05, 0.25, 0.01, 1.0467822516259379),
    (0.05, 0.25, 0.3, 1.0085348488382058),
    (0.05, 0.25, 1.0, 9.7566920085371251e-1),
    (0.05, 0.25, 2.0, 9.517796151527889e-1),
    (0.05, 0.25, 5.0, 9.16342538784018e-1),
    (0.05, 0.25, 9.0, 8.9232606094089075e-1),
    (0.05, 0.25, 16.0, 8.6848961755215727e-1),
    (0.05, 0.25, 25.0, 8.5002572404100071e-1),
    (0.05, 0.25, 40.0, 8.3075373068554455e-1),
    (0.05, 0.25, 64.0, 8.1175201996909441e-1),
    (0.05, 0.25, 200.0, 7.6711776314382135e-1),
    (0.05, 0.5, 1e-06, 1.0965492044599254),
    (0.05, 0.5, 0.01, 1.0795578334012862),
    (0.05, 0.5, 0.3, 1.0215983920661582),
    (0.05, 0.5, 1.0, 9.8232026692319462e-1),
    (0.05, 0.5, 2.0, 9.5583680628538384e-1),
    (0.05, 0.5, 5.0, 9.1823785127265361e-1),
    (0.05, 0.5, 9.0, 8.9343085234504432e-1),
    (0.05, 0.5, 16.0, 8.6912326524085841e-1),
    (0.05, 0.5, 25.0, 8.5043200754639508e-1),
    (0.05, 0.5, 40.0, 8.3100598238552297e-1),
    (0.05, 0.5, 64.0, 8.1190770333530058e-1),
    (0.05, 0.5, 200.0, 7.6716542487903797e-1),
    (0.05, 0.75, 1e-06, 1.2039815303284353),
    (0.05, 0.75, 0.01, 1.1329498514442754),
    (0.05, 0.75, 0.3, 1.0375525251470838),
    (0.05, 0.75, 1.0, 9.8977066241741133e-1),
    (0.05, 0.75, 2.0, 9.6021007295147233e-1),
    (0.05, 0.75, 5.0, 9.2020861632125431e-1),
    (0.05, 0.75, 9.0, 8.9456272593801283e-1),
    (0.05, 0.75, 16.0, 8.6976626131211473e-1),
    (0.05, 0.75, 25.0, 8.5084226459789114e-1),
    (0.05, 0.75, 40.0, 8.3125981535352792e-1),
    (0.05, 0.75, 64.0, 8.1206400684173956e-1),
    (0.05, 0.75, 200.0, 7.6721314857271041e-1),
    (0.05, 1.25, 1e-06, 6.7306588884767942),
    (0.05, 1.25, 0.01, 1.4296699074738392),
    (0.05, 1.25, 0.3, 1.0829115365762296),
    (0.05, 1.25, 1.0, 1.0077697529269272),
    (0.05, 1.25, 2.0, 9.7008486532059807e-1),
    (0.05, 1.25, 5.0, 9.2439882731431202e-1),
    (0.05, 1.25, 9.0, 8.9691271823201134e-1),
    (0.05, 1.25, 16.0, 8.7108134909226221e-1),
    (0.05, 1.25, 25.0, 8.5167499748018156e-1),
    (0.05, 1.25, 40.0, 8.3177230157823687e-1),
    (0.05, 1.25, 64.0, 8.123784934142074e-1),
    (0.05, 1.25, 200.0, 7.6730878246272927e-1),
    (0.05, 1.5, 1e-06, 9.2021700577800864e+1),
    (0.05, 1.5, 0.01, 1.8895268267687281),
    (0.05, 1.5, 0.3, 1.1162891879613379),
    (0.05, 1.5, 1.0, 1.0187953695703513),
    (0.05, 1.5, 2.0, 9.756980585804155e-1),
    (0.05, 1.5, 5.0, 9.2663087280981103e-1),
    (0.05, 1.5, 9.0, 8.9813354079255177e-1),
    (0.05, 1.5, 16.0, 8.7175399262219182e-1),
    (0.05, 1.5, 25.0, 8.5209762746443256e-1),
    (0.05, 1.5, 40.0, 8.320309939240674e-1),
    (0.05, 1.5, 64.0, 8.1253668618559761e-1),
    (0.05, 1.5, 200.0, 7.6735669297420023e-1),
    (0.05, 1.75, 1e-06, 1.9914136492614547e+3),
    (0.05, 1.75, 0.01, 3.065963239759675),
    (0.05, 1.75, 0.3, 1.1612900178889485),
    (0.05, 1.75, 1.0, 1.0316094067957263),
    (0.05, 1.75, 2.0, 9.8185473057248434e-1),
    (0.05, 1.75, 5.0, 9.2896371830734569e-1),
    (0.05, 1.75, 9.0, 8.9938686688175252e-1),
    (0.05, 1.75, 16.0, 8.7243708928508128e-1),
    (0.05, 1.75, 25.0, 8.5252453944576404e-1),
    (0.05, 1.75, 40.0, 8.3229134573187253e-1),
    (0.05, 1.75, 64.0, 8.1269551850956727e-1),
    (0.05, 1.75, 200.0, 7.6740466607438196e-1),
    (0.05, 2.5, 1e-06, 4.5517495168594046e+7),
    (0.05, 2.5, 0.01, 4.7785765662147253e+1),
    (0.05, 2.5, 0.3, 1.4443735797976639),
    (0.05, 2.5, 1.0, 1.0861489342400894),
    (0.05, 2.5, 2.0, 1.004559291811308),
    (0.05, 2.5, 5.0, 9.366525534762533e-1),
    (0.05, 2.5, 9.0, 9.0335830599710799e-1),
    (0.05, 2.5, 16.0, 8.7455221305673618e-1),
    (0.05, 2.5, 25.0, 8.538318038778861e-1),
    (0.05, 2.5, 40.0, 8.3308256404628111e-1),
    (0.05, 2.5, 64.0, 8.1317590300734626e-1),
    (0.05, 2.5, 200.0, 7.675489625006579e-1),
    (0.3, 0.25, 1e-06, 1.2587191142634546),
    (0.3, 0.25, 0.01, 1.2225450109352345),
    (0.3, 0.25, 0.3, 1.0031647160894509),
    (0.3, 0.25, 1.0, 8.3677488756629934e-1),
    (0.3, 0.25, 2.0, 7.2803660011611938e-1),
    (0.3, 0.25, 5.0, 5.8548895722784307e-1),
    (0.3, 0.25, 9.0, 5.013394330458248e-1),
    (0.3, 0.25, 16.0, 4.2733247567464838e-1),
    (0.3, 0.25, 25.0, 3.7616809166819192e-1),
    (0.3, 0.25, 40.0, 3.281383662925876e-1),
    (0.3, 0.25, 64.0, 2.8578955694041885e-1),
    (0.3, 0.25, 200.0, 2.0370934866658744e-1),
    (0.3, 0.5, 1e-06, 1.5212421741791469),
    (0.3, 0.5, 0.01, 1.4124696209134776),
    (0.3, 0.5, 0.3, 1.0705606167296544),
    (0.3, 0.5, 1.0, 8.6764195984686532e-1),
    (0.3, 0.5, 2.0, 7.452924078740467e-1),
    (0.3, 0.5, 5.0, 5.9244010669101753e-1),
    (0.3, 0.5, 9.0, 5.0495759292856836e-1),
    (0.3, 0.5, 16.0, 4.2916960997607146e-1),
    (0.3, 0.5, 25.0, 3.7723372711528132e-1),
    (0.3, 0.5, 40.0, 3.2873143646960265e-1),
    (0.3, 0.5, 64.0, 2.8611674127798027e-1),
    (0.3, 0.5, 200.0, 2.0378516018762441e-1),
    (0.3, 0.75, 1e-06, 2.1915851284632385),
    (0.3, 0.75, 0.01, 1.7319801227177692),
    (0.3, 0.75, 0.3, 1.1546764632376717),
    (0.3, 0.75, 1.0, 9.0277039937129319e-1),
    (0.3, 0.75, 2.0, 7.6411803763706631e-1),
    (0.3, 0.75, 5.0, 5.9972138373005366e-1),
    (0.3, 0.75, 9.0, 5.0868279805286896e-1),
    (0.3, 0.75, 16.0, 4.3103974726102395e-1),
    (0.3, 0.75, 25.0, 3.783121179459323e-1),
    (0.3, 0.75, 40.0, 3.293290743861115e-1),
    (0.3, 0.75, 64.0, 2.8644553117735687e-1),
    (0.3, 0.75, 200.0, 2.038610935210906e-1),
    (0.3, 1.25, 1e-06, 3.8073238966129489e+1),
    (0.3, 1.25, 0.01, 3.5827020053133159),
    (0.3, 1.25, 0.3, 1.4019411325991691),
    (0.3, 1.25, 1.0, 9.8977066241741133e-1),
    (0.3, 1.25, 2.0, 8.0743720823540082e-1),
    (0.3, 1.25, 5.0, 6.1538059072060694e-1),
    (0.3, 1.25, 9.0, 5.1647603062731714e-1),
    (0.3, 1.25, 16.0, 4.3488313065605738e-1),
    (0.3, 1.25, 25.0, 3.8050822835414949e-1),
    (0.3, 1.25, 40.0, 3.3053829957548208e-1),
    (0.3, 1.25, 64.0, 2.871079829976565e-1),
    (0.3, 1.25, 200.0, 2.040133270068246e-1),
    (0.3, 1.5, 1e-06, 5.9309176115467019e+2),
    (0.3, 1.5, 0.01, 6.5112592096230402),
    (0.3, 1.5, 0.3, 1.58929188218349),
    (0.3, 1.5, 1.0, 1.04436170401687),
    (0.3, 1.5, 2.0, 8.3252987090257327e-1),
    (0.3, 1.5, 5.0, 6.2381886026750044e-1),
    (0.3, 1.5, 9.0, 5.2055584244404675e-1),
    (0.3, 1.5, 16.0, 4.3685853735856409e-1),
    (0.3, 1.5, 25.0, 3.8162649863289116e-1),
    (0.3, 1.5, 40.0, 3.3115001284540133e-1),
    (0.3, 1.5, 64.0, 2.8744167300984823e-1),
    (0.3, 1.5, 200.0, 2.0408962785334961e-1),
    (0.3, 1.75, 1e-06, 1.2954752439989653e+4),
    (0.3, 1.75, 0.01, 1.4068105590184508e+1),
    (0.3, 1.75, 0.3, 1.8466783230534712),
    (0.3, 1.75, 1.0, 1.1088622611442715),
    (0.3, 1.75, 2.0, 8.6041371219145348e-1),
    (0.3, 1.75, 5.0, 6.3270870625517851e-1),
    (0.3, 1.75, 9.0, 5.2476633351786354e-1),
    (0.3, 1.75, 16.0, 4.3887127306422568e-1),
    (0.3, 1.75, 25.0, 3.8275862627575621e-1),
    (0.3, 1.75, 40.0, 3.3176654590616001e-1),
    (0.3, 1.75, 64.0, 2.8777702477173693e-1),
    (0.3, 1.75, 200.0, 2.0416605190083296e-1),
    (0.3, 2.5, 1e-06, 2.9624222523426043e+8),
    (0.3, 2.5, 0.01, 3.0382482727250549e+2),
    (0.3, 2.5, 0.3, 3.5244046080028703),
    (0.3, 2.5, 1.0, 1.3930141640559319),
    (0.3, 2.5, 2.0, 9.6613309784081192e-1),
    (0.3, 2.5, 5.0, 6.6250314202660979e-1),
    (0.3, 2.5, 9.0, 5.3825433162585894e-1),
    (0.3, 2.5, 16.0, 4.4514574652631833e-1),
    (0.3, 2.5, 25.0, 3.8624115878862673e-1),
    (0.3, 2.5, 40.0, 3.3364573082362084e-1),
    (0.3, 2.5, 64.0, 2.8879319626374398e-1),
    (0.3, 2.5, 200.0, 2.0439606676279536e-1),
    (0.7, 0.25, 1e-06, 1.3835037390588285),
    (0.7, 0.25, 0.01, 1.3038754617327801),
    (0.7, 0.25, 0.3, 8.7403262605678248e-1),
    (0.7, 0.25, 1.0, 5.9945929984249257e-1),
    (0.7, 0.25, 2.0, 4.4522113469848865e-1),
    (0.7, 0.25, 5.0, 2.7597000154302626e-1),
    (0.7, 0.25, 9.0, 1.948222970538682e-1),
    (0.7, 0.25, 16.0, 1.3547929342302924e-1),
    (0.7, 0.25, 25.0, 1.0111287843494236e-1),
    (0.7, 0.25, 40.0, 7.3780631740067165e-2),
    (0.7, 0.25, 64.0, 5.3573307884712316e-2),
    (0.7, 0.25, 200.0, 2.438327641390968e-2),
    (0.7, 0.5, 1e-06, 1.9276945373469192),
    (0.7, 0.5, 0.01, 1.6823142724483964),
    (0.7, 0.5, 0.3, 9.8834896828572593e-1),
    (0.7, 0.5, 1.0, 6.4449997171435192e-1),
    (0.7, 0.5, 2.0, 4.6740425545733822e-1),
    (0.7, 0.5, 5.0, 2.8314001222994681e-1),
    (0.7, 0.5, 9.0, 1.979644690033156e-1),
    (0.7, 0.5, 16.0, 1.3680122447663976e-1),
    (0.7, 0.5, 25.0, 1.0176866305954301e-1),
    (0.7, 0.5, 40.0, 7.4087917065991443e-2),
    (0.7, 0.5, 64.0, 5.3715266539314771e-2),
    (0.7, 0.5, 200.0, 2.440439295892665e-2),
    (0.7, 0.75, 1e-06, 3.3956404007491446),
    (0.7, 0.75, 0.01, 2.3447749469185845),
    (0.7, 0.75, 0.3, 1.135099907349889),
    (0.7, 0.75, 1.0, 6.9686725364112174e-1),
    (0.7, 0.75, 2.0, 4.9201554967854769e-1),
    (0.7, 0.75, 5.0, 2.907316064565894e-1),
    (0.7, 0.75, 9.0, 2.0122362326021948e-1),
    (0.7, 0.75, 16.0, 1.3815342638072589e-1),
    (0.7, 0.75, 25.0, 1.0243452990173575e-1),
    (0.7, 0.75, 40.0, 7.4398260272229414e-2),
    (0.7, 0.75, 64.0, 5.3858129010731634e-2),
    (0.7, 0.75, 200.0, 2.4425553755112536e-2),
    (0.7, 1.25, 1e-06, 8.5835398774634887e+1),
    (0.7, 1.25, 0.01, 6.3812901737663271),
    (0.7, 1.25, 0.3, 1.5853323640536134),
    (0.7, 1.25, 1.0, 8.3095127694520653e-1),
    (0.7, 1.25, 2.0, 5.5015103071093127e-1),
    (0.7, 1.25, 5.0, 3.0733172581625013e-1),
    (0.7, 1.25, 9.0, 2.0811979089984292e-1),
    (0.7, 1.25, 16.0, 1.4095295791566664e-1),
    (0.7, 1.25, 25.0, 1.0379748029550924e-1),
    (0.7, 1.25, 40.0, 7.5028311628892012e-2),
    (0.7, 1.25, 64.0, 5.4146601704174042e-2),
    (0.7, 1.25, 200.0, 2.4468008688651122e-2),
    (0.7, 1.5, 1e-06, 1.3646970176347882e+3),
    (0.7, 1.5, 0.01, 1.2933739423265723e+1),
    (0.7, 1.5, 0.3, 1.93923477410244),
    (0.7, 1.5, 1.0, 9.1779267722149874e-1),
    (0.7, 1.5, 2.0, 5.8470485980810492e-1),
    (0.7, 1.5, 5.0, 3.1642743661723488e-1),
    (0.7, 1.5, 9.0, 2.1177152978321025e-1),
    (0.7, 1.5, 16.0, 1.4240257290806386e-1),
    (0.7, 1.5, 25.0, 1.0449506842402838e-1),
    (0.7, 1.5, 40.0, 7.5348117954878611e-2),
    (0.7, 1.5, 64.0, 5.4292230385294115e-2),
    (0.7, 1.5, 200.0, 2.4489303121498965e-2),
    (0.7, 1.75, 1e-06, 2.9853407696300812e+4),
    (0.7, 1.75, 0.01, 3.0028522343168458e+1),
    (0.7, 1.75, 0.3, 2.4370141678843407),
    (0.7, 1.75, 1.0, 1.022630242154175),
    (0.7, 1.75, 2.0, 6.2378927056098252e-1),
    (0.7, 1.75, 5.0, 3.2612034980532385e-1),
    (0.7, 1.75, 9.0, 2.1556979549250537e-1),
    (0.7, 1.75, 16.0, 1.4388703545138333e-1),
    (0.7, 1.75, 25.0, 1.0520374855112211e-1),
    (0.7, 1.75, 40.0, 7.5671178565650609e-2),
    (0.7, 1.75, 64.0, 5.4438799805652163e-2),
    (0.7, 1.75, 200.0, 2.4510642396513658e-2),
    (0.7, 2.5, 1e-06, 6.8273541242188113e+8),
    (0.7, 2.5, 0.01, 6.932669960355198e+2),
    (0.7, 2.5, 0.3, 5.8301920431303239),
    (0.7, 2.5, 1.0, 1.5055890101751185),
    (0.7, 2.5, 2.0, 7.7762150030586497e-1),
    (0.7, 2.5, 5.0, 3.5939578076815624e-1),
    (0.7, 2.5, 9.0, 2.2793582519346228e-1),
    (0.7, 2.5, 16.0, 1.4856266861739886e-1),
    (0.7, 2.5, 25.0, 1.0739911909698529e-1),
    (0.7, 2.5, 40.0, 7.6660409014644551e-2),
    (0.7, 2.5, 64.0, 5.4884248643114583e-2),
    (0.7, 2.5, 200.0, 2.4574930772261639e-2),
    (1.0, 0.25, 1e-06, 1.3331857973818341),
    (1.0, 0.25, 0.01, 1.2326897388869476),
    (1.0, 0.25, 0.3, 7.2847047087028389e-1),
    (1.0, 0.25, 1.0, 4.4081075978099538e-1),
    (1.0, 0.25, 2.0, 2.9490607702479091e-1),
    (1.0, 0.25, 5.0, 1.5299366137363267e-1),
    (1.0, 0.25, 9.0, 9.4264998155813175e-2),
    (1.0, 0.25, 16.0, 5.6624447804698521e-2),
    (1.0, 0.25, 25.0, 3.7468978071308266e-2),
    (1.0, 0.25, 40.0, 2.3975129616290982e-2),
    (1.0, 0.25, 64.0, 1.521510979777428e-2),
    (1.0, 0.25, 200.0, 4.9568405436350594e-3),
    (1.0, 0.5, 1e-06, 1.9964590887559462),
    (1.0, 0.5, 0.01, 1.6822142747365185),
    (1.0, 0.5, 0.3, 8.5052171188125109e-1),
    (1.0, 0.5, 1.0, 4.8425568771737579e-1),
    (1.0, 0.5, 2.0, 3.1452308284778211e-1),
    (1.0, 0.5, 5.0, 1.5842971109221217e-1),
    (1.0, 0.5, 9.0, 9.6372321632149536e-2),
    (1.0, 0.5, 16.0, 5.7398270083943027e-2),
    (1.0, 0.5, 25.0, 3.7811385369224171e-2),
    (1.0, 0.5, 40.0, 2.4116475159123113e-2),
    (1.0, 0.5, 64.0, 1.5272362575776586e-2),
    (1.0, 0.5, 200.0, 4.9629607265286537e-3),
    (1.0, 0.75, 1e-06, 3.8450008638278756),
    (1.0, 0.75, 0.01, 2.4880178687882369),
    (1.0, 0.75, 0.3, 1.009960110323262),
    (1.0, 0.75, 1.0, 5.354648517668637e-1),
    (1.0, 0.75, 2.0, 3.3652925874169836e-1),
    (1.0, 0.75, 5.0, 1.6422783524665676e-1),
    (1.0, 0.75, 9.0, 9.8569474535773142e-2),
    (1.0, 0.75, 16.0, 5.8192559533559397e-2),
    (1.0, 0.75, 25.0, 3.8159905599811988e-2),
    (1.0, 0.75, 40.0, 2.4259460942008725e-2),
    (1.0, 0.75, 64.0, 1.5330041703639067e-2),
    (1.0, 0.75, 200.0, 4.9690959679176964e-3),
    (1.0, 1.25, 1e-06, 1.1065196362446077e+2),
    (1.0, 1.25, 0.01, 7.5482695834789304),
    (1.0, 1.25, 0.3, 1.5121571561576237),
    (1.0, 1.25, 1.0, 6.6939193016425346e-1),
    (1.0, 1.25, 2.0, 3.8941022111570341e-1),
    (1.0, 1.25, 5.0, 1.770509507939551e-1),
    (1.0, 1.25, 9.0, 1.0325569459812668e-1),
    (1.0, 1.25, 16.0, 5.9845729009154757e-2),
    (1.0, 1.25, 25.0, 3.8875930657860752e-2),
    (1.0, 1.25, 40.0, 2.4550466319694544e-2),
    (1.0, 1.25, 64.0, 1.5446697932057333e-2),
    (1.0, 1.25, 200.0, 4.9814118479613685e-3),
    (1.0, 1.5, 1e-06, 1.7704556220269193e+3),
    (1.0, 1.5, 0.01, 1.5889286263174075e+1),
    (1.0, 1.5, 0.3, 1.9157971468645816),
    (1.0, 1.5, 1.0, 7.5787215614131211e-1),
    (1.0, 1.5, 2.0, 4.2136922928805447e-1),
    (1.0, 1.5, 5.0, 1.8415702889077878e-1),
    (1.0, 1.5, 9.0, 1.0575709324265836e-1),
    (1.0, 1.5, 16.0, 6.070630405987678e-2),
    (1.0, 1.5, 25.0, 3.9243772292615517e-2),
    (1.0, 1.5, 40.0, 2.4698544060510961e-2),
    (1.0, 1.5, 64.0, 1.5505684667376745e-2),
    (1.0, 1.5, 200.0, 4.9875925981836784e-3),
    (1.0, 1.75, 1e-06, 3.8749784043031095e+4),
    (1.0, 1.75, 0.01, 3.7799553280294076e+1),
    (1.0, 1.75, 0.3, 2.4916999080639484),
    (1.0, 1.75, 1.0, 8.6613378705828407e-1),
    (1.0, 1.75, 2.0, 4.579338426572877e-1),
    (1.0, 1.75, 5.0, 1.9178860823766716e-1),
    (1.0, 1.75, 9.0, 1.0837307015178408e-1),
    (1.0, 1.75, 16.0, 6.1590741257288134e-2),
    (1.0, 1.75, 25.0, 3.961840094400188e-2),
    (1.0, 1.75, 40.0, 2.4848378369112445e-2),
    (1.0, 1.75, 64.0, 1.556511702459516e-2),
    (1.0, 1.75, 200.0, 4.9937886300401029e-3),
    (1.0, 2.5, 1e-06, 8.8622781101345971e+8),
    (1.0, 2.5, 0.01, 8.9446431315870375e+2),
    (1.0, 2.5, 0.3, 6.5263285781076362),
    (1.0, 2.5, 1.0, 1.3789360780706561),
    (1.0, 2.5, 2.0, 6.0534230732201362e-1),
    (1.0, 2.5, 5.0, 2.1841570288907788e-1),
    (1.0, 2.5, 9.0, 1.1698650518014769e-1),
    (1.0, 2.5, 16.0, 6.4397072001871149e-2),
    (1.0, 2.5, 25.0, 4.078487544585231e-2),
    (1.0, 2.5, 40.0, 2.5308731800756387e-2),
    (1.0, 2.5, 64.0, 1.5746138161463881e-2),
    (1.0, 2.5, 200.0, 5.0124689814954592e-3),
    (1.7, 0.25, 1e-06, 9.5405730585827033e-1),
    (1.7, 0.25, 0.01, 8.4920066610109421e-1),
    (1.7, 0.25, 0.3, 3.9254474565586055e-1),
    (1.7, 0.25, 1.0, 1.8534929338623727e-1),
    (1.7, 0.25, 2.0, 1.002906426246865e-1),
    (1.7, 0.25, 5.0, 3.5832886417732996e-2),
    (1.7, 0.25, 9.0, 1.6451392437374569e-2),
    (1.7, 0.25, 16.0, 7.1496290777557313e-3),
    (1.7, 0.25, 25.0, 3.6098210741751069e-3),
    (1.7, 0.25, 40.0, 1.7135435123676167e-3),
    (1.7, 0.25, 64.0, 7.9853307758439201e-4),
    (1.7, 0.25, 200.0, 1.2003797187039681e-4),
    (1.7, 0.5, 1e-06, 1.6047897700235072),
    (1.7, 0.5, 0.01, 1.2679830228639336),
    (1.7, 0.5, 0.3, 4.8402206673213565e-1),
    (1.7, 0.5, 1.0, 2.1173485082488037e-1),
    (1.7, 0.5, 2.0, 1.1021639299833732e-1),
    (1.7, 0.5, 5.0, 3.7810579314907607e-2),
    (1.7, 0.5, 9.0, 1.7037596765796443e-2),
    (1.7, 0.5, 16.0, 7.3086693224548903e-3),
    (1.7, 0.5, 25.0, 3.6642024161261948e-3),
    (1.7, 0.5, 40.0, 1.7303647508420051e-3),
    (1.7, 0.5, 64.0, 8.0357194624086374e-4),
    (1.7, 0.5, 200.0, 1.2028875807809742e-4),
    (1.7, 0.75, 1e-06, 3.5294710804037613),
    (1.7, 0.75, 0.01, 2.0518872013240759),
    (1.7, 0.75, 0.3, 6.0751226614223574e-1),
    (1.7, 0.75, 1.0, 2.4367532185824347e-1),
    (1.7, 0.75, 2.0, 1.2159916242122365e-1),
    (1.7, 0.75, 5.0, 3.9952492896150859e-2),
    (1.7, 0.75, 9.0, 1.7655618333203896e-2),
    (1.7, 0.75, 16.0, 7.4731629112618949e-3),
    (1.7, 0.75, 25.0, 3.719856686550357e-3),
    (1.7, 0.75, 40.0, 1.7474442912974236e-3),
    (1.7, 0.75, 64.0, 8.0866080089971347e-4),
    (1.7, 0.75, 200.0, 1.205403734652161e-4),
    (1.7, 1.25, 1e-06, 1.2064556433653723e+2),
    (1.7, 1.25, 0.01, 7.2534495886193534),
    (1.7, 1.25, 0.3, 1.0161424828526157),
    (1.7, 1.25, 1.0, 3.3070282443244854e-1),
    (1.7, 1.25, 2.0, 1.4989985144634661e-1),
    (1.7, 1.25, 5.0, 4.4802463247462683e-2),
    (1.7, 1.25, 9.0, 1.8996419779963897e-2),
    (1.7, 1.25, 16.0, 7.8195207037677144e-3),
    (1.7, 1.25, 25.0, 3.8351455150955383e-3),
    (1.7, 1.25, 40.0, 1.782399841178353e-3),
    (1.7, 1.25, 64.0, 8.1899117065960856e-4),
    (1.7, 1.25, 200.0, 1.2104610677348802e-4),
    (1.7, 1.5, 1e-06, 1.9468133187106305e+3),
    (1.7, 1.5, 0.01, 1.6073464501167611e+1),
    (1.7, 1.5, 0.3, 1.3584082940238773),
    (1.7, 1.5, 1.0, 3.9041815072449549e-1),
    (1.7, 1.5, 2.0, 1.6757229192966672e-1),
    (1.7, 1.5, 5.0, 4.7553463410411536e-2),
    (1.7, 1.5, 9.0, 1.9724372542706652e-2),
    (1.7, 1.5, 16.0, 8.0019263306058681e-3),
    (1.7, 1.5, 25.0, 3.8948648064076632e-3),
    (1.7, 1.5, 40.0, 1.8002869841245259e-3),
    (1.7, 1.5, 64.0, 8.242340656847771e-4),
    (1.7, 1.5, 200.0, 1.2130023224616466e-4),
    (1.7, 1.75, 1e-06, 4.2642874365571521e+4),
    (1.7, 1.75, 0.01, 3.9548210566071251e+1),
    (1.7, 1.75, 0.3, 1.8598775150492169),
    (1.7, 1.75, 1.0, 4.6537569787579046e-1),
    (1.7, 1.75, 2.0, 1.8824817268919262e-1),
    (1.7, 1.75, 5.0, 5.0555347641049218e-2),
    (1.7, 1.75, 9.0, 2.049453176040842e-2),
    (1.7, 1.75, 16.0, 8.1908701009391934e-3),
    (1.7, 1.75, 25.0, 3.9560266419805164e-3),
    (1.7, 1.75, 40.0, 1.8184547048874215e-3),
    (1.7, 1.75, 64.0, 8.2952970702932666e-4),
    (1.7, 1.75, 200.0, 1.215552020016029e-4),
    (1.7, 2.5, 1e-06, 9.753343538926622e+8),
    (1.7, 2.5, 0.01, 9.7190465230322017e+2),
    (1.7, 2.5, 0.3, 5.5585103843255488),
    (1.7, 2.5, 1.0, 8.3970904707659966e-1),
    (1.7, 2.5, 2.0, 2.7559520071108579e-1),
    (1.7, 2.5, 5.0, 6.1383348787030515e-2),
    (1.7, 2.5, 9.0, 2.3091850586074325e-2),
    (1.7, 2.5, 16.0, 8.8001367276214182e-3),
    (1.7, 2.5, 25.0, 4.1486438185098738e-3),
    (1.7, 2.5, 40.0, 1.8747015139513427e-3),
    (1.7, 2.5, 64.0, 8.4574036831495561e-4),
    (1.7, 2.5, 200.0, 1.2232521537524866e-4),
    (2.5, 0.25, 1e-06, 4.8058544789830995e-1),
    (2.5, 0.25, 0.01, 4.1229422384564556e-1),
    (2.5, 0.25, 0.3, 1.5123140330032825e-1),
    (2.5, 0.25, 1.0, 5.6393289762198341e-2),
    (2.5, 0.25, 2.0, 2.4825579387431628e-2),
    (2.5, 0.25, 5.0, 6.1038829078766452e-3),
    (2.5, 0.25, 9.0, 2.0663473681106247e-3),
    (2.5, 0.25, 16.0, 6.3653715772234859e-4),
    (2.5, 0.25, 25.0, 2.3964337595603614e-4),
    (2.5, 0.25, 40.0, 8.187384230917949e-5),
    (2.5, 0.25, 64.0, 2.7044606228735492e-5),
    (2.5, 0.25, 200.0, 1.6985212200689105e-6),
    (2.5, 0.5, 1e-06, 8.8356468459255067e-1),
    (2.5, 0.5, 0.01, 6.5901548092680642e-1),
    (2.5, 0.5, 0.3, 1.9480192233614189e-1),
    (2.5, 0.5, 1.0, 6.6595161114155002e-2),
    (2.5, 0.5, 2.0, 2.8019544466080786e-2),
    (2.5, 0.5, 5.0, 6.5575336461133037e-3),
    (2.5, 0.5, 9.0, 2.1677802781931022e-3),
    (2.5, 0.5, 16.0, 6.5643265986353973e-4),
    (2.5, 0.5, 25.0, 2.44780167744139e-4),
    (2.5, 0.5, 40.0, 8.3029286071595502e-5),
    (2.5, 0.5, 64.0, 2.7291797423692944e-5),
    (2.5, 0.5, 200.0, 1.7037123125685082e-6),
    (2.5, 0.75, 1e-06, 2.1376334936188916),
    (2.5, 0.75, 0.01, 1.1382335290334305),
    (2.5, 0.75, 0.3, 2.5534856786770286e-1),
    (2.5, 0.75, 1.0, 7.9247991866316654e-2),
    (2.5, 0.75, 2.0, 3.1758764173236609e-2),
    (2.5, 0.75, 5.0, 7.0562909114543198e-3),
    (2.5, 0.75, 9.0, 2.2759339784515535e-3),
    (2.5, 0.75, 16.0, 6.7717546063056823e-4),
    (2.5, 0.75, 25.0, 2.5006799814102525e-4),
    (2.5, 0.75, 40.0, 8.4207230848869053e-5),
    (2.5, 0.75, 64.0, 2.7542120648465462e-5),
    (2.5, 0.75, 200.0, 1.7089255379979988e-6),
    (2.5, 1.25, 1e-06, 8.1921163659752914e+1),
    (2.5, 1.25, 0.01, 4.472411932776015),
    (2.5, 1.25, 0.3, 4.6458316557486855e-1),
    (2.5, 1.25, 1.0, 1.1502876109231487e-1),
    (2.5, 1.25, 2.0, 4.1355881761086786e-2),
    (2.5, 1.25, 5.0, 8.2120331489656599e-3),
    (2.5, 1.25, 9.0, 2.5146708052795011e-3),
    (2.5, 1.25, 16.0, 7.2138669839481636e-4),
    (2.5, 1.25, 25.0, 2.6111942075691876e-4),
    (2.5, 1.25, 40.0, 8.6632862122653857e-5),
    (2.5, 1.25, 64.0, 2.8052366302892547e-5),
    (2.5, 1.25, 200.0, 1.7194188720665036e-6),
    (2.5, 1.5, 1e-06, 1.3297937530620054e+3),
    (2.5, 1.5, 0.01, 1.0267623699014286e+1),
    (2.5, 1.5, 0.3, 6.4623847008071436e-1),
    (2.5, 1.5, 1.0, 1.4042614619562631e-1),
    (2.5, 1.5, 2.0, 4.75320902254867e-2),
    (2.5, 1.5, 5.0, 8.8825928368217176e-3),
    (2.5, 1.5, 9.0, 2.6465282527933626e-3),
    (2.5, 1.5, 16.0, 7.4495441150049585e-4),
    (2.5, 1.5, 25.0, 2.6689497125873797e-4),
    (2.5, 1.5, 40.0, 8.7881709873297423e-5),
    (2.5, 1.5, 64.0, 2.8312392780529577e-5),
    (2.5, 1.5, 200.0, 1.7246992249327819e-6),
    (2.5, 1.75, 1e-06, 2.914555072947136e+4),
    (2.5, 1.75, 0.01, 2.5878232209670809e+1),
    (2.5, 1.75, 0.3, 9.1865017811403135e-1),
    (2.5, 1.75, 1.0, 1.7304258685627348e-1),
    (2.5, 1.75, 2.0, 5.4907732838766646e-2),
    (2.5, 1.75, 5.0, 9.6256934593301698e-3),
    (2.5, 1.75, 9.0, 2.7876679299978484e-3),
    (2.5, 1.75, 16.0, 7.6956841590932038e-4),
    (2.5, 1.75, 25.0, 2.7284550338460448e-4),
    (2.5, 1.75, 40.0, 8.9155382318032226e-5),
    (2.5, 1.75, 64.0, 2.8575759429690214e-5),
    (2.5, 1.75, 200.0, 1.7300021991961447e-6),
    (2.5, 2.5, 1e-06, 6.6666533569394087e+8),
    (2.5, 2.5, 0.01, 6.5545190483508986e+2),
    (2.5, 2.5, 0.3, 3.021982069122851),
    (2.5, 2.5, 1.0, 3.4382954152174947e-1),
    (2.5, 2.5, 2.0, 8.7434657247939161e-2),
    (2.5, 2.5, 5.0, 1.2393865578949211e-2),
    (2.5, 2.5, 9.0, 3.2752865508803499e-3),
    (2.5, 2.5, 16.0, 8.5028831934282881e-4),
    (2.5, 2.5, 25.0, 2.9181528410344385e-4),
    (2.5, 2.5, 40.0, 9.3131695550293415e-5),
    (2.5, 2.5, 64.0, 2.9386452018617869e-5),
    (2.5, 2.5, 200.0, 1.7460480961207989e-6),
    (4.2, 0.25, 1e-06, 5.5018487393389659e-2),
    (4.2, 0.25, 0.01, 4.4206068391961265e-2),
    (4.2, 0.25, 0.3, 1.0885462933101617e-2),
    (4.2, 0.25, 1.0, 2.6974322484908095e-3),
    (4.2, 0.25, 2.0, 8.2593546712943187e-4),
    (4.2, 0.25, 5.0, 1.0334939857701668e-4),
    (4.2, 0.25, 9.0, 1.9809458453698264e-5),
    (4.2, 0.25, 16.0, 3.14935894523884e-6),
    (4.2, 0.25, 25.0, 6.6497916351542563e-7),
    (4.2, 0.25, 40.0, 1.1730694198002289e-7),
    (4.2, 0.25, 64.0, 1.9179786733800532e-8),
    (4.2, 0.25, 200.0, 1.9571628834032403e-10),
    (4.2, 0.5, 1e-06, 1.1440407449404134e-1),
    (4.2, 0.5, 0.01, 7.7527300633215394e-2),
    (4.2, 0.5, 0.3, 1.4923245461366661e-2),
    (4.2, 0.5, 1.0, 3.3480895685453263e-3),
    (4.2, 0.5, 2.0, 9.7192653884980041e-4),
    (4.2, 0.5, 5.0, 1.1443598188708042e-4),
    (4.2, 0.5, 9.0, 2.1262090758165431e-5),
    (4.2, 0.5, 16.0, 3.3011890702321349e-6),
    (4.2, 0.5, 25.0, 6.8744657038565086e-7),
    (4.2, 0.5, 40.0, 1.1996572727741332e-7),
    (4.2, 0.5, 64.0, 1.9465393006321747e-8),
    (4.2, 0.5, 200.0, 1.9671019159738711e-10),
    (4.2, 0.75, 1e-06, 3.1402904255110115e-1),
    (4.2, 0.75, 0.01, 1.4596126995972042e-1),
    (4.2, 0.75, 0.3, 2.0792456214883495e-2),
    (4.2, 0.75, 1.0, 4.1870356457864878e-3),
    (4.2, 0.75, 2.0, 1.1487539522252052e-3),
    (4.2, 0.75, 5.0, 1.2694663530734005e-4),
    (4.2, 0.75, 9.0, 2.284288059752547e-5),
    (4.2, 0.75, 16.0, 3.4618790771513141e-6),
    (4.2, 0.75, 25.0, 7.1083728124835611e-7),
    (4.2, 0.75, 40.0, 1.2269815375534885e-7),
    (4.2, 0.75, 64.0, 1.9756216619592457e-8),
    (4.2, 0.75, 200.0, 1.9771032243053876e-10),
    (4.2, 1.25, 1e-06, 1.3911514942321594e+1),
    (4.2, 1.25, 0.01, 6.5791174022588746e-1),
    (4.2, 1.25, 0.3, 4.2492494300059118e-2),
    (4.2, 1.25, 1.0, 6.704930972909468e-3),
    (4.2, 1.25, 2.0, 1.6269715100656167e-3),
    (4.2, 1.25, 5.0, 1.5712049235379723e-4),
    (4.2, 1.25, 9.0, 2.6442922573128875e-5),
    (4.2, 1.25, 16.0, 3.8122982986172424e-6),
    (4.2, 1.25, 25.0, 7.6056894799194896e-7),
    (4.2, 1.25, 40.0, 1.2839362471478409e-7),
    (4.2, 1.25, 64.0, 2.035396913103307e-8),
    (4.2, 1.25, 200.0, 1.9972945268779685e-10),
    (4.2, 1.5, 1e-06, 2.2765820734345563e+2),
    (4.2, 1.5, 0.01, 1.5828161039777153),
    (4.2, 1.5, 0.3, 6.2403358255388098e-2),
    (4.2, 1.5, 1.0, 8.5902140981125038e-3),
    (4.2, 1.5, 2.0, 1.9501275458961232e-3),
    (4.2, 1.5, 5.0, 1.7531865325106704e-4),
    (4.2, 1.5, 9.0, 2.8493162633526135e-5),
    (4.2, 1.5, 16.0, 4.0033781066948612e-6),
    (4.2, 1.5, 25.0, 7.8700633779504139e-7),
    (4.2, 1.5, 40.0, 1.3136174470954922e-7),
    (4.2, 1.5, 64.0, 2.0661131734049619e-8),
    (4.2, 1.5, 200.0, 2.0074854604596774e-10),
    (4.2, 1.75, 1e-06, 4.994359440354925e+3),
    (4.2, 1.75, 0.01, 4.1239485324382881),
    (4.2, 1.75, 0.3, 9.3363425945286449e-2),
    (4.2, 1.75, 1.0, 1.1100369543302792e-2),
    (4.2, 1.75, 2.0, 2.3490874419444534e-3),
    (4.2, 1.75, 5.0, 1.9602516865376695e-4),
    (4.2, 1.75, 9.0, 3.0733954422379272e-5),
    (4.2, 1.75, 16.0, 4.2060274431305335e-6),
    (4.2, 1.75, 25.0, 8.1456021142382683e-7),
    (4.2, 1.75, 40.0, 1.3441366464575131e-7),
    (4.2, 1.75, 64.0, 2.097397924693619e-8),
    (4.2, 1.75, 200.0, 2.0177405485621406e-10),
    (4.2, 2.5, 1e-06, 1.1425262640556311e+8),
    (4.2, 2.5, 0.01, 1.0940872253715317e+2),
    (4.2, 2.5, 0.3, 3.5046231603789044e-1),
    (4.2, 2.5, 1.0, 2.5273252550786464e-2),
    (4.2, 2.5, 2.0, 4.2357235292422849e-3),
    (4.2, 2.5, 5.0, 2.7753314517261325e-4),
    (4.2, 2.5, 9.0, 3.8817197869301153e-5),
    (4.2, 2.5, 16.0, 4.8918836450202569e-6),
    (4.2, 2.5, 25.0, 9.0448855696801855e-7),
    (4.2, 2.5, 40.0, 1.4410059629157932e-7),
    (4.2, 2.5, 64.0, 2.1947889858899857e-8),
    (4.2, 2.5, 200.0, 2.0488955595563432e-10),
];
