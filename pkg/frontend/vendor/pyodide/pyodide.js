"use strict";var loadPyodide=(()=>{var ne=Object.create;var F=Object.defineProperty;var re=Object.getOwnPropertyDescriptor;var oe=Object.getOwnPropertyNames;var ie=Object.getPrototypeOf,ae=Object.prototype.hasOwnProperty;var i=(e,t)=>F(e,"name",{value:t,configurable:!0}),m=(e=>typeof require<"u"?require:typeof Proxy<"u"?new Proxy(e,{get:(t,n)=>(typeof require<"u"?require:t)[n]}):e)(function(e){if(typeof require<"u")return require.apply(this,arguments);throw Error('Dynamic require of "'+e+'" is not supported')});var se=(e,t)=>{for(var n in t)F(e,n,{get:t[n],enumerable:!0})},$=(e,t,n,o)=>{if(t&&typeof t=="object"||typeof t=="function")for(let s of oe(t))!ae.call(e,s)&&s!==n&&F(e,s,{get:()=>t[s],enumerable:!(o=re(t,s))||o.enumerable});return e};var v=(e,t,n)=>(n=e!=null?ne(ie(e)):{},$(t||!e||!e.__esModule?F(n,"default",{value:e,enumerable:!0}):n,e)),le=e=>$(F({},"__esModule",{value:!0}),e);var j=(()=>{for(var e=new Uint8Array(128),t=0;t<64;t++)e[t<26?t+65:t<52?t+71:t<62?t-4:t*4-205]=t;return n=>{for(var o=n.length,s=new Uint8Array((o-(n[o-1]=="=")-(n[o-2]=="="))*3/4|0),r=0,a=0;r<o;){var c=e[n.charCodeAt(r++)],l=e[n.charCodeAt(r++)],d=e[n.charCodeAt(r++)],u=e[n.charCodeAt(r++)];s[a++]=c<<2|l>>4,s[a++]=l<<4|d>>2,s[a++]=d<<6|u}return s}})();var je={};se(je,{loadPyodide:()=>B,version:()=>O});function ce(e){return!isNaN(parseFloat(e))&&isFinite(e)}i(ce,"_isNumber");function N(e){return e.charAt(0).toUpperCase()+e.substring(1)}i(N,"_capitalize");function C(e){return function(){return this[e]}}i(C,"_getter");var S=["isConstructor","isEval","isNative","isToplevel"],w=["columnNumber","lineNumber"],_=["fileName","functionName","source"],de=["args"],ue=["evalOrigin"],D=S.concat(w,_,de,ue);function y(e){if(e)for(var t=0;t<D.length;t++)e[D[t]]!==void 0&&this["set"+N(D[t])](e[D[t]])}i(y,"StackFrame");y.prototype={getArgs:i(function(){return this.args},"getArgs"),setArgs:i(function(e){if(Object.prototype.toString.call(e)!=="[object Array]")throw new TypeError("Args must be an Array");this.args=e},"setArgs"),getEvalOrigin:i(function(){return this.evalOrigin},"getEvalOrigin"),setEvalOrigin:i(function(e){if(e instanceof y)this.evalOrigin=e;else if(e instanceof Object)this.evalOrigin=new y(e);else throw new TypeError("Eval Origin must be an Object or StackFrame")},"setEvalOrigin"),toString:i(function(){var e=this.getFileName()||"",t=this.getLineNumber()||"",n=this.getColumnNumber()||"",o=this.getFunctionName()||"";return this.getIsEval()?e?"[eval] ("+e+":"+t+":"+n+")":"[eval]:"+t+":"+n:o?o+" ("+e+":"+t+":"+n+")":e+":"+t+":"+n},"toString")};y.fromString=i(function(t){var n=t.indexOf("("),o=t.lastIndexOf(")"),s=t.substring(0,n),r=t.substring(n+1,o).split(","),a=t.substring(o+1);if(a.indexOf("@")===0)var c=/@(.+?)(?::(\d+))?(?::(\d+))?$/.exec(a,""),l=c[1],d=c[2],u=c[3];return new y({functionName:s,args:r||void 0,fileName:l,lineNumber:d||void 0,columnNumber:u||void 0})},"StackFrame$$fromString");for(E=0;E<S.length;E++)y.prototype["get"+N(S[E])]=C(S[E]),y.prototype["set"+N(S[E])]=function(e){return function(t){this[e]=!!t}}(S[E]);var E;for(P=0;P<w.length;P++)y.prototype["get"+N(w[P])]=C(w[P]),y.prototype["set"+N(w[P])]=function(e){return function(t){if(!ce(t))throw new TypeError(e+" must be a Number");this[e]=Number(t)}}(w[P]);var P;for(h=0;h<_.length;h++)y.prototype["get"+N(_[h])]=C(_[h]),y.prototype["set"+N(_[h])]=function(e){return function(t){this[e]=String(t)}}(_[h]);var h,x=y;function fe(){var e=/^\s*at .*(\S+:\d+|\(native\))/m,t=/^(eval@)?(\[native code])?$/;return{parse:i(function(o){if(o.stack&&o.stack.match(e))return this.parseV8OrIE(o);if(o.stack)return this.parseFFOrSafari(o);throw new Error("Cannot parse given Error object")},"ErrorStackParser$$parse"),extractLocation:i(function(o){if(o.indexOf(":")===-1)return[o];var s=/(.+?)(?::(\d+))?(?::(\d+))?$/,r=s.exec(o.replace(/[()]/g,""));return[r[1],r[2]||void 0,r[3]||void 0]},"ErrorStackParser$$extractLocation"),parseV8OrIE:i(function(o){var s=o.stack.split(`
`).filter(function(r){return!!r.match(e)},this);return s.map(function(r){r.indexOf("(eval ")>-1&&(r=r.replace(/eval code/g,"eval").replace(/(\(eval at [^()]*)|(,.*$)/g,""));var a=r.replace(/^\s+/,"").replace(/\(eval code/g,"(").replace(/^.*?\s+/,""),c=a.match(/ (\(.+\)$)/);a=c?a.replace(c[0],""):a;var l=this.extractLocation(c?c[1]:a),d=c&&a||void 0,u=["eval","<anonymous>"].indexOf(l[0])>-1?void 0:l[0];return new x({functionName:d,fileName:u,lineNumber:l[1],columnNumber:l[2],source:r})},this)},"ErrorStackParser$$parseV8OrIE"),parseFFOrSafari:i(function(o){var s=o.stack.split(`
`).filter(function(r){return!r.match(t)},this);return s.map(function(r){if(r.indexOf(" > eval")>-1&&(r=r.replace(/ line (\d+)(?: > eval line \d+)* > eval:\d+:\d+/g,":$1")),r.indexOf("@")===-1&&r.indexOf(":")===-1)return new x({functionName:r});var a=/((.*".+"[^@]*)?[^@]*)(?:@)/,c=r.match(a),l=c&&c[1]?c[1]:void 0,d=this.extractLocation(r.replace(a,""));return new x({functionName:l,fileName:d[0],lineNumber:d[1],columnNumber:d[2],source:r})},this)},"ErrorStackParser$$parseFFOrSafari")}}i(fe,"ErrorStackParser");var me=new fe;var H=me;function pe(){if(typeof API<"u"&&API!==globalThis.API)return API.runtimeEnv;let e=typeof Bun<"u",t=typeof Deno<"u",n=typeof process=="object"&&typeof process.versions=="object"&&typeof process.versions.node=="string"&&!process.browser,o=typeof navigator=="object"&&typeof navigator.userAgent=="string"&&navigator.userAgent.indexOf("Chrome")===-1&&navigator.userAgent.indexOf("Safari")>-1,s=typeof read=="function"&&typeof load=="function",r=typeof navigator=="object"&&navigator.userAgent?.includes("Cloudflare-Workers");return ye({IN_BUN:e,IN_DENO:t,IN_NODE:n,IN_SAFARI:o,IN_SHELL:s,IN_WORKERD:r})}i(pe,"getGlobalRuntimeEnv");var f=pe();function ye(e){let t=e.IN_NODE&&typeof module<"u"&&module.exports&&typeof m=="function"&&typeof __dirname=="string",n=e.IN_NODE&&!t,o=!e.IN_NODE&&!e.IN_DENO&&!e.IN_BUN,s=o&&typeof window<"u"&&typeof window.document<"u"&&typeof document.createElement=="function"&&"sessionStorage"in window&&typeof globalThis.importScripts!="function",r=o&&typeof globalThis.WorkerGlobalScope<"u"&&typeof globalThis.self<"u"&&globalThis.self instanceof globalThis.WorkerGlobalScope;if(r&&ge())throw new Error("Classic web workers are not supported");let a={...e,IN_BROWSER:o,IN_BROWSER_MAIN_THREAD:s,IN_BROWSER_WEB_WORKER:r,IN_NODE_COMMONJS:t,IN_NODE_ESM:n};if(!(a.IN_BROWSER_MAIN_THREAD||a.IN_BROWSER_WEB_WORKER||a.IN_NODE||a.IN_SHELL||a.IN_WORKERD))throw new Error(`Cannot determine runtime environment: ${JSON.stringify(a)}`);return a}i(ye,"calculateDerivedFlags");function ge(){try{return globalThis.importScripts("data:text/javascript,"),!0}catch{return!1}}i(ge,"isClassicWorker");var V,T,ve,J,U;async function W(){if(!f.IN_NODE||(V=(await import(/* webpackIgnore */"node:url")).default,J=await import(/* webpackIgnore */"node:fs"),U=await import(/* webpackIgnore */"node:fs/promises"),ve=(await import(/* webpackIgnore */"node:vm")).default,T=await import(/* webpackIgnore */"node:path"),M=T.sep,typeof m<"u"))return;let e=J,t=await import(/* webpackIgnore */"node:crypto"),n=await import(/* webpackIgnore */"ws"),o=await import(/* webpackIgnore */"node:child_process"),s={fs:e,crypto:t,ws:n,child_process:o};globalThis.require=function(r){return s[r]}}i(W,"initNodeModules");function be(e,t){return T.resolve(t||".",e)}i(be,"node_resolvePath");function Ee(e,t){return t===void 0&&(t=location),new URL(e,t).toString()}i(Ee,"browser_resolvePath");var k;f.IN_NODE?k=be:f.IN_SHELL?k=i(e=>e,"resolvePath"):k=Ee;var M;f.IN_NODE||(M="/");function Pe(e,t){return e.startsWith("file://")&&(e=e.slice(7)),e.includes("://")?{response:fetch(e)}:{binary:U.readFile(e).then(n=>new Uint8Array(n.buffer,n.byteOffset,n.byteLength))}}i(Pe,"node_getBinaryResponse");function he(e,t){if(e.startsWith("file://")&&(e=e.slice(7)),e.includes("://"))throw new Error("Shell cannot fetch urls");return{binary:Promise.resolve(new Uint8Array(readbuffer(e)))}}i(he,"shell_getBinaryResponse");function Ne(e,t){let n=new URL(e,location);return{response:fetch(n,t?{integrity:t}:{})}}i(Ne,"browser_getBinaryResponse");var R;f.IN_NODE?R=Pe:f.IN_SHELL?R=he:R=Ne;async function z(e,t){let{response:n,binary:o}=R(e,t);if(o)return o;let s=await n;if(!s.ok)throw new Error(`Failed to load '${e}': request failed.`);return new Uint8Array(await s.arrayBuffer())}i(z,"loadBinaryFile");var L;f.IN_NODE?L=Ie:L=i(async e=>await import(/* webpackIgnore */e),"loadScript");async function Ie(e){return e.startsWith("file://")&&(e=e.slice(7)),e.includes("://")?await import(/* webpackIgnore */e):await import(/* webpackIgnore */V.pathToFileURL(e).href)}i(Ie,"nodeLoadScript");async function G(e){if(f.IN_NODE){await W();let t=await U.readFile(e,{encoding:"utf8"});return JSON.parse(t)}else if(f.IN_SHELL){let t=read(e);return JSON.parse(t)}else return await(await fetch(e)).json()}i(G,"loadLockFile");async function K(){if(f.IN_NODE_COMMONJS)return __dirname;let e;try{throw new Error}catch(o){e=o}let t=H.parse(e)[0].fileName;if(f.IN_NODE&&!t.startsWith("file://")&&(t=`file://${t}`),f.IN_NODE_ESM){let o=await import(/* webpackIgnore */"node:path");return(await import(/* webpackIgnore */"node:url")).fileURLToPath(o.dirname(t))}let n=t.lastIndexOf(M);if(n===-1)throw new Error("Could not extract indexURL path from pyodide module location. Please pass the indexURL explicitly to loadPyodide.");return t.slice(0,n)}i(K,"calculateDirname");function q(e){return e.substring(0,e.lastIndexOf("/")+1)||globalThis.location?.toString()||"."}i(q,"calculateInstallBaseUrl");function Y(e){let t=e.FS,n=e.FS.filesystems.MEMFS,o=e.PATH,s={DIR_MODE:16895,FILE_MODE:33279,mount:i(function(r){if(!r.opts.fileSystemHandle)throw new Error("opts.fileSystemHandle is required");return n.mount.apply(null,arguments)},"mount"),syncfs:i(async(r,a,c)=>{try{let l=s.getLocalSet(r),d=await s.getRemoteSet(r),u=a?d:l,g=a?l:d;await s.reconcile(r,u,g),c(null)}catch(l){c(l)}},"syncfs"),getLocalSet:i(r=>{let a=Object.create(null);function c(u){return u!=="."&&u!==".."}i(c,"isRealDir");function l(u){return g=>o.join2(u,g)}i(l,"toAbsolute");let d=t.readdir(r.mountpoint).filter(c).map(l(r.mountpoint));for(;d.length;){let u=d.pop(),g=t.stat(u);t.isDir(g.mode)&&d.push.apply(d,t.readdir(u).filter(c).map(l(u))),a[u]={timestamp:g.mtime,mode:g.mode}}return{type:"local",entries:a}},"getLocalSet"),getRemoteSet:i(async r=>{let a=Object.create(null),c=await Se(r.opts.fileSystemHandle);for(let[l,d]of c)l!=="."&&(a[o.join2(r.mountpoint,l)]={timestamp:d.kind==="file"?new Date((await d.getFile()).lastModified):new Date,mode:d.kind==="file"?s.FILE_MODE:s.DIR_MODE});return{type:"remote",entries:a,handles:c}},"getRemoteSet"),loadLocalEntry:i(r=>{let c=t.lookupPath(r,{}).node,l=t.stat(r);if(t.isDir(l.mode))return{timestamp:l.mtime,mode:l.mode};if(t.isFile(l.mode))return c.contents=n.getFileDataAsTypedArray(c),{timestamp:l.mtime,mode:l.mode,contents:c.contents};throw new Error("node type not supported")},"loadLocalEntry"),storeLocalEntry:i((r,a)=>{if(t.isDir(a.mode))t.mkdirTree(r,a.mode);else if(t.isFile(a.mode))t.writeFile(r,a.contents,{canOwn:!0});else throw new Error("node type not supported");t.chmod(r,a.mode),t.utime(r,a.timestamp,a.timestamp)},"storeLocalEntry"),removeLocalEntry:i(r=>{var a=t.stat(r);t.isDir(a.mode)?t.rmdir(r):t.isFile(a.mode)&&t.unlink(r)},"removeLocalEntry"),loadRemoteEntry:i(async r=>{if(r.kind==="file"){let a=await r.getFile();return{contents:new Uint8Array(await a.arrayBuffer()),mode:s.FILE_MODE,timestamp:new Date(a.lastModified)}}else{if(r.kind==="directory")return{mode:s.DIR_MODE,timestamp:new Date};throw new Error("unknown kind: "+r.kind)}},"loadRemoteEntry"),storeRemoteEntry:i(async(r,a,c)=>{let l=r.get(o.dirname(a)),d=t.isFile(c.mode)?await l.getFileHandle(o.basename(a),{create:!0}):await l.getDirectoryHandle(o.basename(a),{create:!0});if(d.kind==="file"){let u=await d.createWritable();await u.write(c.contents),await u.close()}r.set(a,d)},"storeRemoteEntry"),removeRemoteEntry:i(async(r,a)=>{await r.get(o.dirname(a)).removeEntry(o.basename(a)),r.delete(a)},"removeRemoteEntry"),reconcile:i(async(r,a,c)=>{let l=0,d=[];Object.keys(a.entries).forEach(function(p){let b=a.entries[p],I=c.entries[p];(!I||t.isFile(b.mode)&&b.timestamp.getTime()>I.timestamp.getTime())&&(d.push(p),l++)}),d.sort();let u=[];if(Object.keys(c.entries).forEach(function(p){a.entries[p]||(u.push(p),l++)}),u.sort().reverse(),!l)return;let g=a.type==="remote"?a.handles:c.handles;for(let p of d){let b=o.normalize(p.replace(r.mountpoint,"/")).substring(1);if(c.type==="local"){let I=g.get(b),te=await s.loadRemoteEntry(I);s.storeLocalEntry(p,te)}else{let I=s.loadLocalEntry(p);await s.storeRemoteEntry(g,b,I)}}for(let p of u)if(c.type==="local")s.removeLocalEntry(p);else{let b=o.normalize(p.replace(r.mountpoint,"/")).substring(1);await s.removeRemoteEntry(g,b)}},"reconcile")};e.FS.filesystems.NATIVEFS_ASYNC=s}i(Y,"initializeNativeFS");var Se=i(async e=>{let t=[];async function n(s){for await(let r of s.values())t.push(r),r.kind==="directory"&&await n(r)}i(n,"collect"),await n(e);let o=new Map;o.set(".",e);for(let s of t){let r=(await e.resolve(s)).join("/");o.set(r,s)}return o},"getFsHandles");var X=j("AGFzbQEAAAABDANfAGAAAW9gAW8BfwMDAgECBygCE0pzdl9HZXRFcnJvcl9pbXBvcnQAAA5Kc3ZFcnJvcl9DaGVjawABChMCBwD7AQD7GwsJACAA+xr7FAAL");var _e=async function(){if(!(globalThis.navigator&&(/iPad|iPhone|iPod/.test(navigator.userAgent)||navigator.platform==="MacIntel"&&typeof navigator.maxTouchPoints<"u"&&navigator.maxTouchPoints>1)))try{let t=await WebAssembly.compile(X);return await WebAssembly.instantiate(t)}catch(t){if(t instanceof WebAssembly.CompileError)return;throw t}}();async function Q(){let e=await _e;if(e)return e.exports;let t=Symbol("error marker");return{Jsv_GetError_import:i(()=>t,"Jsv_GetError_import"),JsvError_Check:i(n=>n===t,"JsvError_Check")}}i(Q,"getJsvErrorImport");function Z(e){let t={config:e,runtimeEnv:f},n={noImageDecoding:!0,noAudioDecoding:!0,noWasmDecoding:!1,preRun:De(e),print:e.stdout,printErr:e.stderr,onExit(o){n.exitCode=o},thisProgram:e._sysExecutable,arguments:e.args,API:t,locateFile:i(o=>e.indexURL+o,"locateFile"),instantiateWasm:xe(e.indexURL)};return n}i(Z,"createSettings");function ke(e){return function(t){let n="/";try{t.FS.mkdirTree(e)}catch(o){console.error(`Error occurred while making a home directory '${e}':`),console.error(o),console.error(`Using '${n}' for a home directory instead`),e=n}t.FS.chdir(e)}}i(ke,"createHomeDirectory");function Re(e){return function(t){Object.assign(t.ENV,e)}}i(Re,"setEnvironment");function Fe(e){return e?[async t=>{t.addRunDependency("fsInitHook");try{await e(t.FS,{sitePackages:t.API.sitePackages})}finally{t.removeRunDependency("fsInitHook")}}]:[]}i(Fe,"callFsInitHook");function Ae(e){let t=e.HEAPU32[e._Py_Version>>>2],n=t>>>24&255,o=t>>>16&255,s=t>>>8&255;return[n,o,s]}i(Ae,"computeVersionTuple");function Oe(e){let t=z(e);return async n=>{n.API.pyVersionTuple=Ae(n);let[o,s]=n.API.pyVersionTuple;n.FS.mkdirTree("/lib"),n.API.sitePackages=`/lib/python${o}.${s}/site-packages`,n.FS.mkdirTree(n.API.sitePackages),n.addRunDependency("install-stdlib");try{let r=await t;n.FS.writeFile(`/lib/python${o}${s}.zip`,r)}catch(r){console.error("Error occurred while installing the standard library:"),console.error(r)}finally{n.removeRunDependency("install-stdlib")}}}i(Oe,"installStdlib");function De(e){let t;return e.stdLibURL!=null?t=e.stdLibURL:t=e.indexURL+"python_stdlib.zip",[Oe(t),ke(e.env.HOME),Re(e.env),Y,...Fe(e.fsInit)]}i(De,"getFileSystemInitializationFuncs");function xe(e){if(typeof WasmOffsetConverter<"u")return;let{binary:t,response:n}=R(e+"pyodide.asm.wasm"),o=Q();return function(s,r){return async function(){let{Jsv_GetError_import:a,JsvError_Check:c}=await o;s.env.Jsv_GetError_import=a,s.env.JsvError_Check=c;try{let l;n?l=await WebAssembly.instantiateStreaming(n,s):l=await WebAssembly.instantiate(await t,s);let{instance:d,module:u}=l;r(d,u)}catch(l){console.warn("wasm instantiation failed!"),console.warn(l)}}(),{}}}i(xe,"getInstantiateWasmFunc");var ee="314.0.3";function A(e){return e===void 0||e.endsWith("/")?e:e+"/"}i(A,"withTrailingSlash");var O=ee;async function Le(e={}){if(await W(),e.lockFileContents&&e.lockFileURL)throw new Error("Can't pass both lockFileContents and lockFileURL");let t=e.indexURL||await K();if(t=A(k(t)),e.packageBaseUrl=A(e.packageBaseUrl),e.cdnUrl=A(e.packageBaseUrl??`https://cdn.jsdelivr.net/pyodide/v${O}/full/`),!e.lockFileContents){let s=e.lockFileURL??t+"pyodide-lock.json";e.lockFileContents=G(s),e.packageBaseUrl??=q(s)}e.indexURL=t,e.packageCacheDir&&(e.packageCacheDir=A(k(e.packageCacheDir)));let n={jsglobals:globalThis,stdin:globalThis.prompt?()=>globalThis.prompt():void 0,args:[],env:{},packages:[],packageCacheDir:e.packageBaseUrl,enableRunUntilComplete:!0,checkAPIVersion:!0,BUILD_ID:"2cf7085e96ffaa58f5400af724c388859f9e21586cf6f254da008c60685a5d05"},o=Object.assign(n,e);return o.env.HOME??="/home/pyodide",o.env.PYTHONINSPECT??="1",o}i(Le,"initializeConfiguration");function Ce(e){let t=Z(e),n=t.API;return n.lockFilePromise=Promise.resolve(e.lockFileContents),t}i(Ce,"createEmscriptenSettings");async function Te(e){if(e.createPyodideModule)return e.createPyodideModule;let t=`${e.indexURL}pyodide.asm.mjs`;return(await L(t)).default}i(Te,"loadWasmScript");async function Ue(e,t){if(!e._loadSnapshot)return;let n=await e._loadSnapshot,o=ArrayBuffer.isView(n)?n:new Uint8Array(n);return t.noInitialRun=!0,t.INITIAL_MEMORY=o.length,o}i(Ue,"prepareSnapshot");async function We(e,t){let n=await e(t);if(t.exitCode!==void 0)throw new n.ExitStatus(t.exitCode);return n}i(We,"instantiatePyodideModule");function Me(e,t){let n=e.API;if(t.pyproxyToStringRepr&&n.setPyProxyToStringMethod(!0),t.convertNullToNone&&n.setCompatNullToNone(!0),t.toJsLiteralMap&&n.setCompatToJsLiteralMap(!0),n.version!==O&&t.checkAPIVersion)throw new Error(`Pyodide version does not match: '${O}' <==> '${n.version}'. If you updated the Pyodide version, make sure you also updated the 'indexURL' parameter passed to loadPyodide.`);e.locateFile=o=>{throw o.endsWith(".so")?new Error(`Failed to find dynamic library "${o}"`):new Error(`Unexpected call to locateFile("${o}")`)}}i(Me,"configureAPI");function Be(e,t,n){let o=e.API,s;return t&&(s=o.restoreSnapshot(t)),o.finalizeBootstrap(s,n._snapshotDeserializer)}i(Be,"bootstrapPyodide");async function $e(e,t){let n=e._api;return n.sys.path.insert(0,""),n._pyodide.set_excepthook(),await n.packageIndexReady,n.initializeStreams(t.stdin,t.stdout,t.stderr),e}i($e,"finalizeSetup");async function B(e={}){let t=await Le(e),n=Ce(t),o=await Te(t),s=await Ue(t,n),r=await We(o,n);Me(r,t);let a=Be(r,s,t);return await $e(a,t)}i(B,"loadPyodide");globalThis.loadPyodide=B;return le(je);})();
try{Object.assign(exports,loadPyodide)}catch(_){}
globalThis.loadPyodide=loadPyodide.loadPyodide;
//# sourceMappingURL=pyodide.js.map
