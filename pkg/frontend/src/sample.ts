// Built-in demo table so the tool can be tried without uploading any data.
export const SAMPLE_CSV = `language,form,A,B,C,D
l1,f1,1,1,0,0
l1,f2,0,1,1,0
l2,f3,1,0,1,0
l2,f4,1,1,1,0
l3,f5,0,0,0,1
l3,f6,0,0,0,0
`;

export const SAMPLE_NAME = "sample.csv";
